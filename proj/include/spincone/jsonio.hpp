#pragma once

#include <json.hpp>

#include "spincone/homology.hpp"
#include "spincone/interval.hpp"
#include "spincone/polynomial.hpp"
#include "spincone/relations.hpp"
#include "spincone/series.hpp"

namespace spincone {

using nlohmann::json;

json interval_json(const Interval& iv);
json series_json(const GradedSeries& s);
std::string series_csv(const GradedSeries& s);
json rat2_json(const Rat2& r);
json rat1_json(const Rat1& r);
json relation_json(const QuadricRelation& r);
json betti_json(const BettiTable& bt);

// content hash of the frozen data tables (cover table, embedding, weights,
// K matrix); stable across runs
unsigned long long fixture_hash();

}  // namespace spincone
