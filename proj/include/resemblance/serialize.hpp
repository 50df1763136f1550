#pragma once

#include "resemblance/incompressible.hpp"

#include <json.hpp>

namespace resemblance {

using Json = nlohmann::ordered_json;

Json to_json(const Ext& e);
Json to_json(const ClosedSet& s);
Json to_json(const CoveringMap& h);
Json to_json(const FinitePattern& p);
Json relation_json(const Calculus& c, const std::string& query, const Verdict& v, const Ordinal& subject);
Json nu_json(const Calculus& c, const std::string& query, const Verdict& v, const Ordinal& subject);
Json verify_json(const VerifyResult& r, const ClosedSet& x, const Budget& b);

} // namespace resemblance
