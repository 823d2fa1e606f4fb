#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grp/enumerator.hpp"
#include "grp/presentation.hpp"

namespace grp {

enum class Status {
  LeftOrderable,
  CircOrderableNotLo,
  NotCircOrderable,
  Unknown,
};

// Wire names: LEFT_ORDERABLE, CIRC_ORDERABLE_NOT_LO, NOT_CIRC_ORDERABLE,
// UNKNOWN.
std::string to_string(Status s);

// One applied rule. `facts` holds only values this library computed, in a
// fixed order; `assumptions` flags the results trusted from the literature.
struct TraceStep {
  std::string rule;
  std::string cite;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> assumptions;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// A status other than Unknown always carries a nonempty trace, and every
// NotCircOrderable trace contains at least one computed finite fact.
struct Verdict {
  Status status = Status::Unknown;
  std::vector<TraceStep> trace;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Recognizes < x, y | y^n, x^e y x^-e y^t > up to generator renaming,
// relator order, cyclic permutation and inversion. The returned l is the
// conjugation exponent x y x^-1 = y^l exhibited by the matched orientation
// (swapping x and x^-1 is accepted without inverting l), reduced mod n.
std::optional<std::pair<long, long>> detect_metacyclic(const Presentation& p);

// Verdict for < x, y | y^n, x y x^-1 = y^l >. Computes n' = the largest
// divisor of n coprime to l (the order of y after the conjugation relation
// collapses it) and certifies it by enumerating the index of <x>.
Verdict metacyclic_verdict(long n, long l);

// For a presentation with exactly one relator: LEFT_ORDERABLE when the
// cyclically reduced relator is not a proper power (Brodskii), nullopt when
// it is a proper power.
std::optional<Verdict> one_relator_verdict(const Presentation& p);

// The central-quotient tensor obstruction. `w` must be syntactically
// central: for every generator g, either w is a power of g or some relator
// is a cyclic rotation of [w, g]^{+-1}. The quotient H by w is enumerated
// (must be finite within `limits`), H (x) H is built, and a nonabelian
// nilpotent H (x) H together with infinite cyclic abelianization yields
// NOT_CIRC_ORDERABLE; anything else is UNKNOWN. Throws Error when
// centrality cannot be certified, OverflowError on enumeration overflow.
Verdict central_quotient_tensor_pipeline(const Presentation& p, const Word& w,
                                         const Limits& limits = Limits{});

// Exact Gaussian-integer verification backing the bundled witness rule:
// (1-i)^2 = -2i, the relator images (1-i)^{k+2} - 2(1-i)^{k+1} + 2(1-i)^k
// vanish for k = 0..8, and n(1-i)^{-2} + m(1-i)^{-1} = 0 forces n = m = 0
// on the window |n|, |m| <= 10.
bool g9_witness_check();

// Applies the rules in order: free/cyclic detection, one-relator (Brodskii),
// metacyclic detection and collapse, then the bundled configurations for the
// table entries G3 (pipeline with w = x^3) and G9 (Gaussian witness).
// Returns the first conclusive verdict, else UNKNOWN with an empty trace.
Verdict classify(const Presentation& p, const Limits& limits = Limits{});

// Same, for a bundled table id; throws Error on an unknown id.
Verdict classify(const std::string& green_id, const Limits& limits = Limits{});

}  // namespace grp
