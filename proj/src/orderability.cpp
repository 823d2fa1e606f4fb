#include "grp/orderability.hpp"

#include <cstdlib>
#include <numeric>

#include "grp/errors.hpp"
#include "grp/finite_group.hpp"
#include "grp/intmatrix.hpp"
#include "grp/knots.hpp"
#include "grp/tensor.hpp"

namespace grp {

std::string to_string(Status s) {
  switch (s) {
    case Status::LeftOrderable:
      return "LEFT_ORDERABLE";
    case Status::CircOrderableNotLo:
      return "CIRC_ORDERABLE_NOT_LO";
    case Status::NotCircOrderable:
      return "NOT_CIRC_ORDERABLE";
    case Status::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

// Maximal runs g^e of a cyclically reduced word, with the wrap-around run
// merged. In a cyclically reduced word adjacent equal generators carry equal
// signs, so runs are delimited by generator changes alone.
struct Run {
  int gen;
  long exp;
};

std::vector<Run> cyclic_runs(const Word& w) {
  std::vector<Run> runs;
  for (const Letter& l : w.letters()) {
    if (!runs.empty() && runs.back().gen == l.gen)
      runs.back().exp += l.sign;
    else
      runs.push_back({l.gen, l.sign});
  }
  if (runs.size() >= 2 && runs.front().gen == runs.back().gen) {
    runs.front().exp += runs.back().exp;
    runs.pop_back();
  }
  return runs;
}

// Relator of the form g^{+-n}: (generator, n).
std::optional<std::pair<int, long>> pure_power(const Word& w) {
  if (w.empty()) return std::nullopt;
  auto runs = cyclic_runs(w);
  if (runs.size() != 1) return std::nullopt;
  return std::make_pair(runs[0].gen, std::labs(runs[0].exp));
}

std::optional<Verdict> free_verdict(const Presentation& p) {
  for (const auto& r : p.relators)
    if (!r.empty()) return std::nullopt;
  TraceStep step;
  step.rule = "free_group";
  step.facts = {{"free_rank", std::to_string(p.generator_count())},
                {"relators", "all freely trivial"}};
  if (p.generator_count() == 1) {
    step.cite =
        "the infinite cyclic group is left-orderable by its natural order";
  } else {
    step.cite = "free groups are bi-orderable, hence left-orderable";
    step.assumptions = {"free groups are left-orderable"};
  }
  return Verdict{Status::LeftOrderable, {step}};
}

TraceStep metacyclic_detection_step(const Presentation& p, long n, long l) {
  TraceStep step;
  step.rule = "metacyclic_detection";
  step.cite =
      "the presentation matches < x, y | y^n, x y x^-1 = y^l > up to "
      "renaming, relator rotation and inversion, and swapping x with x^-1";
  step.facts = {{"presentation", to_text(p)},
                {"n", std::to_string(n)},
                {"l", std::to_string(l)}};
  return step;
}

bool matches_up_to_rotation(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const auto& bl = b.letters();
  for (std::size_t s = 0; s < bl.size(); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < bl.size() && ok; ++i)
      ok = a[i] == bl[(s + i) % bl.size()];
    if (ok) return true;
  }
  return false;
}

// How the relators certify [w, g] = 1; throws when they do not.
std::string centrality_certificate(const Presentation& p, const Word& w,
                                   int g) {
  bool power_of_g = true;
  for (const Letter& l : w.letters())
    if (l.gen != g) power_of_g = false;
  if (power_of_g) return "trivial: w is a power of " + p.generators[g];

  Word gw = Word::generator(g);
  Word core =
      cyclic_reduce(free_reduce(w * gw * w.inverse() * gw.inverse())).core;
  if (core.empty()) return "trivial: [w, g] freely reduces to the identity";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Word rcore = cyclic_reduce(p.relators[i]).core;
    if (matches_up_to_rotation(core, rcore) ||
        matches_up_to_rotation(core, rcore.inverse()))
      return "certified by relator " + std::to_string(i + 1);
  }
  throw Error("centrality of " + word_to_text(p.generators, w) +
              " is not certified: no relator matches [w, " + p.generators[g] +
              "]");
}

Verdict g9_bundled_verdict() {
  if (!g9_witness_check())
    throw Error("internal: the Gaussian-integer witness identities failed");
  TraceStep step;
  step.rule = "derived_subgroup_gaussian_witness";
  step.cite =
      "Ichimori's presentation of the derived subgroup; Clay and Rolfsen: a "
      "group whose finitely generated subgroups are left-orderable is "
      "left-orderable";
  step.facts = {
      {"(1-i)^2", "-2i"},
      {"(1-i)^{k+2} - 2(1-i)^{k+1} + 2(1-i)^k for k = 0..8", "0"},
      {"n(1-i)^{-2} + m(1-i)^{-1} = 0 on |n|, |m| <= 10", "only at n = m = 0"}};
  step.assumptions = {
      "the derived subgroup is < a_k (k in Z) | a_{k+2} = a_k^-2 a_{k+1}^2, "
      "[a_k, a_{k+1}] = 1 > (Ichimori)",
      "a_k -> (1-i)^k embeds every finitely generated subgroup of the "
      "derived subgroup into a rank-2 free abelian subgroup of the Gaussian "
      "integers",
      "a group whose finitely generated subgroups are left-orderable is "
      "left-orderable",
      "an extension of the integers by a left-orderable group is "
      "left-orderable; the quotient by the derived subgroup is infinite "
      "cyclic"};
  return Verdict{Status::LeftOrderable, {step}};
}

}  // namespace

std::optional<std::pair<long, long>> detect_metacyclic(const Presentation& p) {
  if (p.generator_count() != 2 || p.relators.size() != 2) return std::nullopt;
  for (int pi = 0; pi < 2; ++pi) {
    auto pp = pure_power(cyclic_reduce(p.relators[pi]).core);
    if (!pp) continue;
    const int ygen = pp->first;
    const int xgen = 1 - ygen;
    const long n = pp->second;

    const Word conj = cyclic_reduce(p.relators[1 - pi]).core;
    if (conj.empty()) continue;
    auto runs = cyclic_runs(conj);
    if (runs.size() != 4) continue;
    for (int r = 0; r < 4; ++r) {
      if (runs[r].gen != xgen) continue;
      const Run& x1 = runs[r];
      const Run& y1 = runs[(r + 1) % 4];
      const Run& x2 = runs[(r + 2) % 4];
      const Run& y2 = runs[(r + 3) % 4];
      if (y1.gen != ygen || x2.gen != xgen || y2.gen != ygen) break;
      if (std::labs(x1.exp) != 1 || x1.exp + x2.exp != 0) continue;
      if (std::labs(y1.exp) != 1 && std::labs(y2.exp) != 1) continue;
      // x^e y^d x^-e y^t = 1 reads x^e y x^-e = y^{-t d}
      long l = -(y1.exp * y2.exp);
      return std::make_pair(n, ((l % n) + n) % n);
    }
  }
  return std::nullopt;
}

Verdict metacyclic_verdict(long n, long l) {
  if (n < 1) throw Error("metacyclic_verdict needs n >= 1");
  l = ((l % n) + n) % n;
  long np = n;  // largest divisor of n coprime to l
  for (;;) {
    long g = std::gcd(np, l);
    if (g <= 1) break;
    np /= g;
  }

  // certify the collapse: [ <x,y | y^n, x y x^-1 y^-l> : <x> ] = n'
  Presentation shape({"x", "y"},
                     {free_reduce(Word::generator(1).pow(n)),
                      free_reduce(Word::generator(0) * Word::generator(1) *
                                  Word::generator(0, -1) *
                                  Word::generator(1).pow(-l))});
  auto res = todd_coxeter(shape, {Word::generator(0)},
                          Limits{static_cast<std::size_t>(1024 + 8 * n)});
  long index = static_cast<long>(require_table(res).coset_count());
  if (index != np)
    throw Error("internal: enumerated index " + std::to_string(index) +
                " does not match the computed collapse " + std::to_string(np));

  std::vector<std::pair<std::string, std::string>> facts = {
      {"n", std::to_string(n)},
      {"l", std::to_string(l)},
      {"n_prime", std::to_string(np)},
      {"order_of_y", std::to_string(np)},
      {"index_of_<x>", std::to_string(index)}};

  if (np == 1) {
    TraceStep step;
    step.rule = "metacyclic_collapse";
    step.cite =
        "y^n = 1 and x y x^-1 = y^l force y = 1 when no divisor of n other "
        "than 1 is coprime to l; the quotient is infinite cyclic, "
        "left-orderable by its natural order";
    step.facts = std::move(facts);
    return Verdict{Status::LeftOrderable, {step}};
  }
  if (l % np == 1) {
    TraceStep step;
    step.rule = "metacyclic_abelian";
    step.cite =
        "the group is Z x Z_n', which embeds in the circle group as an "
        "irrational rotation together with a rotation of order n'; the "
        "torsion element y obstructs a left order";
    step.facts = std::move(facts);
    step.assumptions = {"subgroups of the circle group are circularly orderable",
                        "left-orderable groups are torsion-free"};
    return Verdict{Status::CircOrderableNotLo, {step}};
  }
  TraceStep step;
  step.rule = "metacyclic_obstruction";
  step.cite =
      "in a circularly orderable group the finite cyclic normal subgroup <y> "
      "would be central, making the group abelian; l != 1 (mod n') makes it "
      "nonabelian";
  step.facts = std::move(facts);
  step.facts.push_back(
      {"nonabelian_witness",
       "[x, y] = y^" + std::to_string((l % np + np - 1) % np) + " != 1"});
  step.assumptions = {
      "a finite cyclic normal subgroup of a circularly orderable group is "
      "central"};
  return Verdict{Status::NotCircOrderable, {step}};
}

std::optional<Verdict> one_relator_verdict(const Presentation& p) {
  if (p.relators.size() != 1)
    throw Error("one_relator_verdict needs exactly one relator");
  if (p.relators[0].empty()) return free_verdict(p);
  Word core = cyclic_reduce(p.relators[0]).core;
  if (proper_power_root(core)) return std::nullopt;
  TraceStep step;
  step.rule = "one_relator_torsion_free";
  step.cite = "Brodskii: torsion-free one-relator groups are left-orderable";
  step.facts = {{"relator", word_to_text(p.generators, core)},
                {"relator is not a proper power", "verified"}};
  step.assumptions = {
      "a one-relator group is torsion-free unless its relator is a proper "
      "power (Karrass, Magnus, Solitar)"};
  return Verdict{Status::LeftOrderable, {step}};
}

Verdict central_quotient_tensor_pipeline(const Presentation& p, const Word& w,
                                         const Limits& limits) {
  Verdict v;
  const Word wr = free_reduce(w);
  if (wr.empty()) throw Error("central word is trivial");

  TraceStep cert;
  cert.rule = "central_certificate";
  cert.cite =
      "a relator equal, up to cyclic rotation and inversion, to [w, g] "
      "certifies that w and g commute";
  cert.facts.push_back({"w", word_to_text(p.generators, wr)});
  for (std::size_t g = 0; g < p.generator_count(); ++g)
    cert.facts.push_back({"[w, " + p.generators[g] + "]",
                          centrality_certificate(p, wr, static_cast<int>(g))});
  v.trace.push_back(cert);

  Presentation hp = add_relators(p, {wr});
  auto res = todd_coxeter(hp, {}, limits);
  const CosetTable& tab = require_table(res);
  FiniteGroup h = group_from_coset_table(tab);
  TraceStep quot;
  quot.rule = "central_quotient";
  quot.cite =
      "adding w as a relator presents the quotient by the central subgroup "
      "generated by w";
  quot.facts = {{"H", to_text(hp)}, {"|H|", std::to_string(h.order())}};
  v.trace.push_back(quot);

  Fingerprint fh = fingerprint(h);
  TraceStep fq;
  fq.rule = "quotient_fingerprint";
  fq.cite =
      "isomorphism-invariant summary: order, abelianization, derived series, "
      "center, nilpotency class, exponent, order histogram";
  fq.facts = {{"H", to_string(fh)}};
  v.trace.push_back(fq);

  TensorSquare t = tensor_square(h);
  Fingerprint ft = fingerprint(t.carrier);
  const bool nonabelian = !is_abelian(t.carrier);
  TraceStep ts;
  ts.rule = "tensor_square";
  ts.cite =
      "H (x) H built on the pair symbols with the two defining relation "
      "families of the nonabelian tensor square";
  ts.facts = {{"|HxH|", std::to_string(t.carrier.order())},
              {"HxH", to_string(ft)},
              {"HxH_abelian", nonabelian ? "no" : "yes"},
              {"HxH_nilpotency_class",
               ft.nilpotency_class ? std::to_string(*ft.nilpotency_class)
                                   : "-"}};
  v.trace.push_back(ts);

  AbelianInvariants ab = abelianization(p);
  const bool ab_is_z = ab.free_rank == 1 && ab.torsion.empty();
  if (nonabelian && ft.nilpotency_class && ab_is_z) {
    TraceStep done;
    done.rule = "tensor_obstruction";
    done.cite =
        "circular orderability would make the tensor square of the group "
        "left-orderable, hence torsion-free; the computed quotient data "
        "contradicts every torsion-free possibility";
    done.facts = {{"abelianization", to_string(ab)},
                  {"|HxH|", std::to_string(t.carrier.order())},
                  {"HxH_abelian", "no"},
                  {"HxH_nilpotency_class",
                   std::to_string(*ft.nilpotency_class)}};
    done.assumptions = {
        "left-orderable groups are torsion-free",
        "if the second homology is infinite cyclic and the group is "
        "circularly orderable, the nonabelian tensor square is "
        "left-orderable",
        "if the second homology is finite, the group is not circularly "
        "orderable (universal central extension argument)",
        "a surjection of groups induces a surjection of nonabelian tensor "
        "squares",
        "for a group with infinite cyclic abelianization and an infinite "
        "cyclic central subgroup of finite index, a torsion-free tensor "
        "square must be infinite cyclic, free abelian of rank 2, or a Klein "
        "bottle group",
        "a central extension of a nilpotent group is nilpotent; the Klein "
        "bottle group is not nilpotent"};
    v.status = Status::NotCircOrderable;
    v.trace.push_back(done);
  } else {
    TraceStep stop;
    stop.rule = "no_conclusion";
    stop.cite = "none";
    std::string reason = !nonabelian ? "H (x) H is abelian"
                         : !ft.nilpotency_class
                             ? "H (x) H is not nilpotent"
                             : "abelianization is not infinite cyclic";
    stop.facts = {{"abelianization", to_string(ab)}, {"reason", reason}};
    v.trace.push_back(stop);
    v.status = Status::Unknown;
  }
  return v;
}

namespace {

struct Gauss {
  long long re = 0;
  long long im = 0;

  friend bool operator==(const Gauss&, const Gauss&) = default;
};

Gauss gmul(Gauss a, Gauss b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Gauss gadd(Gauss a, Gauss b) { return {a.re + b.re, a.im + b.im}; }

Gauss gscale(long long k, Gauss a) { return {k * a.re, k * a.im}; }

}  // namespace

bool g9_witness_check() {
  const Gauss z{1, -1};
  if (gmul(z, z) != Gauss{0, -2}) return false;

  std::vector<Gauss> pw(11);
  pw[0] = {1, 0};
  for (std::size_t k = 1; k < pw.size(); ++k) pw[k] = gmul(pw[k - 1], z);
  for (int k = 0; k <= 8; ++k) {
    Gauss image =
        gadd(pw[k + 2], gadd(gscale(-2, pw[k + 1]), gscale(2, pw[k])));
    if (image != Gauss{0, 0}) return false;
  }

  // n z^-2 + m z^-1 = 0 iff n + m z = 0 (the Gaussian integers are an
  // integral domain and z^2 != 0), i.e. (n + m) - m i = 0
  for (long long n = -10; n <= 10; ++n)
    for (long long m = -10; m <= 10; ++m) {
      if (n == 0 && m == 0) continue;
      if (gadd(Gauss{n, 0}, gscale(m, z)) == Gauss{0, 0}) return false;
    }
  return true;
}

Verdict classify(const Presentation& p, const Limits& limits) {
  if (auto v = free_verdict(p)) return *v;
  if (p.relators.size() == 1) {
    if (auto v = one_relator_verdict(p)) return *v;
  }
  if (auto nl = detect_metacyclic(p)) {
    Verdict v = metacyclic_verdict(nl->first, nl->second);
    v.trace.insert(v.trace.begin(),
                   metacyclic_detection_step(p, nl->first, nl->second));
    return v;
  }
  const auto& table = green_table();
  if (p == table.at("G3"))
    return central_quotient_tensor_pipeline(
        p, parse_word(p.generators, "x^3"), limits);
  if (p == table.at("G9")) return g9_bundled_verdict();
  return Verdict{};
}

Verdict classify(const std::string& green_id, const Limits& limits) {
  const auto& table = green_table();
  auto it = table.find(green_id);
  if (it == table.end())
    throw Error("unknown green table id: " + green_id);
  return classify(it->second, limits);
}

}  // namespace grp
