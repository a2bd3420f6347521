#pragma once

#include <json.hpp>

#include "wschur/expansion.hpp"
#include "wschur/grassmann.hpp"

namespace wschur {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& lambda);
Json to_json(const Polynomial& p);
Json to_json(const DenomGen& gen);
Json to_json(const LocalizedElem& e);
Json to_json(const ExpansionResult& expansion);
Json to_json(const WeightConfig& cfg);
Json to_json(const RestrictionTable& table);

std::string table_to_csv(const RestrictionTable& table);

} // namespace wschur
