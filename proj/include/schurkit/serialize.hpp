#pragma once

#include "schurkit/pathmodel.hpp"
#include "schurkit/presentation.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace schurkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// Integers that fit in 64 bits become JSON numbers, anything else a "p/q" string.
Json to_json(const Rational& q);
Json to_json(const Weight& w);
// {"label": ..., "elements": [[...], ...]}
Json to_json(const WeightSet& ws);
// {"rows", "cols", "entries"}, entries row-major as "p/q" strings.
Json to_json(const ExactMatrix& m);
Json to_json(const RelationReport& rep);
Json to_json(const DecompositionResult& res);
Json to_json(const ZeroLocus& z);
Json to_json(const QuotientWitness& q);
Json to_json(const Path& p);
Json to_json(const Crystal& c);
Json to_json(const CensusReport& c);

// {tool_version, family, rank, r, reduced_word}; rank, r and the word are
// null when absent.
Json header_json(std::optional<Family> family, std::optional<int> rank, std::optional<int> r);

// family,n,r,equal,|pi|,|pi0|,dim_S_pi,dim_Schur
std::string decomposition_csv_header();
std::string decomposition_csv_row(Family family, int n, int r, bool equal, std::size_t pi, std::size_t pi0,
                                  const SchurDimensions& dims);

} // namespace schurkit
