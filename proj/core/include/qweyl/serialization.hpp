#pragma once

#include "qweyl/divided_power.hpp"
#include "qweyl/formal_uq.hpp"
#include "qweyl/laurent.hpp"
#include "qweyl/multi_index.hpp"
#include "qweyl/report.hpp"
#include "qweyl/weyl.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace qweyl {

using Json = nlohmann::ordered_json;

/// {"2":1,"0":2,"-2":1}, exponents descending. Coefficients outside the
/// int64 range are written as decimal strings.
Json to_json(const LaurentPoly& p);
/// [1,0,2]
Json to_json(const MultiIndex& m);
/// {"n":2,"terms":[{"beta":[1,1],"coeff":{"1":1}}]}
Json to_json(const Element& e);
/// {"k":"X","i":1}, {"k":"S","i":1,"e":-1}, {"k":"T","mu":[1,0]}
Json to_json(const GenSymbol& g);
/// {"n":2,"terms":[{"word":[...],"coeff":{...}}]}
Json to_json(const Operator& op);
/// Same layout with symbols {"k":"E","i":1}, {"k":"F","i":1}, {"k":"K","v":[...]}.
Json to_json(const FormalUq& x);
Json to_json(const BraidWord& w);
Json to_json(const VerificationReport& r);

/// Inverses of the writers above. Throw InvalidArgs on malformed input.
LaurentPoly laurent_from_json(const Json& j);
MultiIndex multi_index_from_json(const Json& j);
Element element_from_json(const Json& j);
Operator operator_from_json(const Json& j);
FormalUq formal_uq_from_json(const Json& j);

std::string to_string(Status s);

/// Human-readable report: a header line, one line per relation, and the
/// counterexample of each failure.
std::string to_text(const VerificationReport& r);

} // namespace qweyl
