#pragma once

#include "fusion/verify.hpp"

#include <string>

namespace fusion {

inline constexpr int table_schema_version = 1;

// {schema_version, type, level, method, weights, N} with N nested [λ][μ][ν].
std::string table_to_json(const FusionTable& t, int indent = 2);
// Throws UsageError on malformed input or an unsupported schema version.
FusionTable table_from_json(const std::string& text);

// Header "lambda_index,mu_index,nu_index,N", one row per nonzero N.
std::string table_to_csv(const FusionTable& t);

// {side, entries: [{rep: [..], re, im}]}, zero coefficients omitted.
std::string element_to_json(const AlgebraElement& f, int indent = 2);
AlgebraElement element_from_json(const ContextPtr& ctx, const std::string& text);

// Affine data with exact rationals as "p/q" strings.
std::string affine_data_to_json(const AffineData& d, int indent = 2);

std::string report_to_json(const VerifyReport& r, int indent = 2);

}  // namespace fusion
