#include "grp/knots.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "grp/errors.hpp"
#include "grp/word.hpp"
#include "green_data.h"

namespace grp {

namespace {

long mod_inverse(long a, long m) {
  // extended Euclid; requires gcd(a, m) = 1, m >= 1
  long r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw Error("mod_inverse: arguments are not coprime");
  return ((s0 % m) + m) % m;
}

}  // namespace

GaussCode parse_gauss_code(const std::string& text) {
  GaussCode code;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip();
  while (i < text.size()) {
    std::size_t start = i;
    char kind = text[i];
    if (kind != 'O' && kind != 'U')
      throw ParseError("expected O or U", start);
    ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == digits) throw ParseError("expected crossing id", start);
    int id = 0;
    try {
      id = std::stoi(text.substr(digits, i - digits));
    } catch (const std::out_of_range&) {
      throw ParseError("crossing id out of range", start);
    }
    if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
      throw ParseError("expected crossing sign + or -", start);
    int sign = text[i] == '+' ? 1 : -1;
    ++i;
    code.passes.push_back({id, kind == 'O', sign});
    skip();
  }

  std::map<int, std::vector<std::size_t>> by_id;
  for (std::size_t k = 0; k < code.passes.size(); ++k)
    by_id[code.passes[k].crossing].push_back(k);
  for (const auto& [id, where] : by_id) {
    if (where.size() != 2)
      throw Error("crossing " + std::to_string(id) + " occurs " +
                  std::to_string(where.size()) + " times, expected 2");
    const Pass& a = code.passes[where[0]];
    const Pass& b = code.passes[where[1]];
    if (a.over == b.over)
      throw Error("crossing " + std::to_string(id) +
                  " needs one over-pass and one under-pass");
    if (a.sign != b.sign)
      throw Error("crossing " + std::to_string(id) +
                  " has mismatched signs on its two passes");
  }
  return code;
}

Presentation wirtinger_presentation(const GaussCode& code) {
  const auto& ps = code.passes;
  if (ps.empty()) throw Error("empty Gauss code");

  std::vector<std::size_t> unders;
  std::map<int, std::size_t> over_pos;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].over)
      over_pos[ps[i].crossing] = i;
    else
      unders.push_back(i);
  }
  const std::size_t n = unders.size();

  // arc k = positions (unders[k-1], unders[k]], cyclically
  auto arc_of = [&](std::size_t pos) -> int {
    auto it = std::lower_bound(unders.begin(), unders.end(), pos);
    return it == unders.end() ? 0 : static_cast<int>(it - unders.begin());
  };

  std::vector<std::string> gens;
  gens.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    gens.push_back("a" + std::to_string(k + 1));

  std::vector<Word> rels;
  rels.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    int a = static_cast<int>(k);               // incoming under-arc
    int c = static_cast<int>((k + 1) % n);     // outgoing under-arc
    int b = arc_of(over_pos.at(ps[unders[k]].crossing));
    Word conj = ps[unders[k]].sign > 0
                    ? Word::generator(b) * Word::generator(a) *
                          Word::generator(b, -1)
                    : Word::generator(b, -1) * Word::generator(a) *
                          Word::generator(b);
    rels.push_back(free_reduce(Word::generator(c) * conj.inverse()));
  }
  return Presentation(std::move(gens), std::move(rels));
}

MaedaGroup maeda_group(long m, long n) {
  if (m < 2) throw Error("maeda_group needs m >= 2");
  if (std::gcd(m, n) != 1) throw Error("maeda_group needs gcd(m, n) = 1");
  if (std::gcd(n - 1, m) != 1)
    throw Error("maeda_group needs gcd(n - 1, m) = 1");

  MaedaGroup out;
  out.q = mod_inverse(n - 1, m);

  const Word x = Word::generator(0);
  const Word a = Word::generator(1);
  out.metacyclic = Presentation(
      {"x", "a"},
      {free_reduce(a.pow(m)),
       free_reduce(x.inverse() * a * x * a.pow(-n))});

  const Word y = Word::generator(1);
  const Word yx = y.inverse() * x;  // y^-1 x, maps to a under y -> x a^-1
  auto twisted = [&](long e) { return yx.pow(-e) * x * yx.pow(e); };
  out.wirtinger = Presentation(
      {"x", "y"},
      {free_reduce(y * twisted(out.q).inverse()),
       free_reduce(x * twisted(m).inverse())});
  return out;
}

MetacyclicNF metacyclic_normal_form(const Word& w, long m, long l) {
  if (m < 1) throw Error("metacyclic_normal_form needs m >= 1");
  long lm = ((l % m) + m) % m;
  if (std::gcd(m, lm) != 1)
    throw Error("metacyclic_normal_form needs gcd(l, m) = 1");
  long linv = mod_inverse(lm, m);

  MetacyclicNF nf;
  for (const Letter& t : w.letters()) {
    if (t.gen == 0) {
      // x^k a^j x^{+-1} = x^{k+-1} a^{j l^{+-1}}
      nf.k += t.sign;
      nf.j = (nf.j * (t.sign > 0 ? lm : linv)) % m;
    } else if (t.gen == 1) {
      nf.j = ((nf.j + t.sign) % m + m) % m;
    } else {
      throw Error("metacyclic_normal_form: word is not over {x, a}");
    }
  }
  return nf;
}

MetacyclicNF nf_multiply(const MetacyclicNF& lhs, const MetacyclicNF& rhs,
                         long m, long l) {
  if (m < 1) throw Error("nf_multiply needs m >= 1");
  long lm = ((l % m) + m) % m;
  if (std::gcd(m, lm) != 1) throw Error("nf_multiply needs gcd(l, m) = 1");
  long step = rhs.k >= 0 ? lm : mod_inverse(lm, m);
  long j = ((lhs.j % m) + m) % m;
  for (long i = 0; i < std::labs(rhs.k); ++i) j = (j * step) % m;
  return {lhs.k + rhs.k, (((j + rhs.j) % m) + m) % m};
}

namespace {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::map<std::string, Presentation> parse_green_text(const std::string& text) {
  const std::string prefix = "# fnv1a64: ";
  auto nl = text.find('\n');
  if (nl == std::string::npos || text.compare(0, prefix.size(), prefix) != 0)
    throw Error("green table is corrupt: missing checksum header");
  const std::string body = text.substr(nl + 1);
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(body);
  if (hex.str() != text.substr(prefix.size(), nl - prefix.size()))
    throw Error("green table is corrupt: checksum mismatch");

  std::map<std::string, Presentation> out;
  std::istringstream lines(body);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error("green table line without id: " + line);
    std::string id = line.substr(0, colon);
    while (!id.empty() && id.back() == ' ') id.pop_back();
    if (!out.emplace(id, parse_presentation(line.substr(colon + 1))).second)
      throw Error("green table has a duplicate id: " + id);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& green_ids() {
  static const std::vector<std::string> ids = {
      "Z", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9"};
  return ids;
}

const std::map<std::string, Presentation>& green_table() {
  static const std::map<std::string, Presentation> table = [] {
    auto t = parse_green_text(detail::kGreenGroupsText);
    for (const auto& id : green_ids())
      if (!t.count(id)) throw Error("green table is missing entry " + id);
    return t;
  }();
  return table;
}

std::map<std::string, Presentation> green_table_from_file(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_green_text(buf.str());
}

}  // namespace grp
