#pragma once

#include <string>

#include "json.hpp"

#include "grp/finite_group.hpp"
#include "grp/intmatrix.hpp"
#include "grp/orderability.hpp"

namespace grp {

// Insertion-ordered JSON so that identical inputs render byte-identically.
using Json = nlohmann::ordered_json;

Json json_abelian(const AbelianInvariants& a);

Json json_fingerprint(const Fingerprint& f);

// { "group", "status", "trace": [ { "rule", "cite", "facts", "assumptions" } ] }
Json json_verdict(const std::string& group_label, const Verdict& v);

// Multi-line text rendering of a verdict, one trace step per paragraph.
std::string render_verdict(const std::string& group_label, const Verdict& v);

}  // namespace grp
