#include "grp/report.hpp"

#include <sstream>

namespace grp {

namespace {

long long to_ll(const BigInt& b) { return b.convert_to<long long>(); }

}  // namespace

Json json_abelian(const AbelianInvariants& a) {
  Json j;
  j["free_rank"] = a.free_rank;
  Json torsion = Json::array();
  for (const auto& t : a.torsion) torsion.push_back(to_ll(t));
  j["torsion"] = torsion;
  j["display"] = to_string(a);
  return j;
}

Json json_fingerprint(const Fingerprint& f) {
  Json j;
  j["order"] = to_ll(f.order);
  j["abelianization"] = json_abelian(f.abelianization);
  Json derived = Json::array();
  for (const auto& d : f.derived_series_orders) derived.push_back(to_ll(d));
  j["derived_series_orders"] = derived;
  j["center_order"] = to_ll(f.center_order);
  if (f.nilpotency_class)
    j["nilpotency_class"] = *f.nilpotency_class;
  else
    j["nilpotency_class"] = nullptr;
  j["exponent"] = to_ll(f.exponent);
  Json hist = Json::object();
  for (const auto& [o, c] : f.order_histogram)
    hist[std::to_string(o)] = c;
  j["order_histogram"] = hist;
  return j;
}

Json json_verdict(const std::string& group_label, const Verdict& v) {
  Json j;
  j["group"] = group_label;
  j["status"] = to_string(v.status);
  Json trace = Json::array();
  for (const auto& s : v.trace) {
    Json step;
    step["rule"] = s.rule;
    step["cite"] = s.cite;
    Json facts = Json::object();
    for (const auto& [k, val] : s.facts) facts[k] = val;
    step["facts"] = facts;
    step["assumptions"] = s.assumptions;
    trace.push_back(step);
  }
  j["trace"] = trace;
  return j;
}

std::string render_verdict(const std::string& group_label, const Verdict& v) {
  std::ostringstream out;
  out << group_label << ": " << to_string(v.status) << "\n";
  for (const auto& s : v.trace) {
    out << "  rule " << s.rule << "  [" << s.cite << "]\n";
    for (const auto& [k, val] : s.facts)
      out << "    " << k << " = " << val << "\n";
    for (const auto& a : s.assumptions) out << "    assuming: " << a << "\n";
  }
  return out.str();
}

}  // namespace grp
