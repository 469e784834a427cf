#pragma once

#include <json.hpp>

#include "wallcross/coefficients.hpp"
#include "wallcross/hall.hpp"
#include "wallcross/invariants.hpp"
#include "wallcross/lie.hpp"
#include "wallcross/stackcalc.hpp"
#include "wallcross/verify.hpp"

namespace wallcross {

// Insertion-ordered JSON so reports are deterministic byte-for-byte.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);         // exact "p/q" string, never decimals
Json to_json(const ChernClass& c);       // [c1, c2, ...]
Json to_json(const NumClass& c);         // {"beta": [...], "d": n}
Json to_json(const HallElement& e);      // [{"coeff": "p/q", "word": [...]}, ...]
Json to_json(const LieElement& e);       // [{"coeff": "p/q", "class": {...}}, ...]
Json to_json(const StackFnElement& e);   // {"[pt/Gm]": "p/q", ...}
Json to_json(const LambdaChoice& c);
Json to_json(const CaseSplit& s);
Json to_json(const FlatNestedReport& r);
Json to_json(const InvariantResult& r);
Json to_json(const AuditCheck& c);
Json to_json(const AuditReport& r);
Json to_json(const SelfCheckSummary& s);

}  // namespace wallcross
