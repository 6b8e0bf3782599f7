#pragma once

#include "monosize/deformation.hpp"
#include "monosize/harness.hpp"
#include "monosize/polarization.hpp"
#include "monosize/size.hpp"

#include <json.hpp>

#include <string>

namespace monosize {

using Json = nlohmann::ordered_json;

// JSON report builders. Every index (variable, component, row, column) is
// 1-indexed in output.
Json to_json(const Decomposition &d);
Json to_json(const SizeReport &r);
Json to_json(const CoverFamily &f);
Json to_json(const PolarizationResult &p);
Json to_json(const TopBase &b);
Json to_json(const PolarizationSizeReport &r);
Json to_json(const EqualityVerdict &v);
Json to_json(const DeformationSizeReport &r);
Json to_json(const FuzzReport &r);
Json to_json(const std::vector<ExampleCheck> &checks);
Json matrix_json(const PowerMatrix &m);

/// Array of arrays, one row per generator in canonical order.
Json deformation_json(const DeformationVectors &eps);
/// Throws Error(invalid_argument) on anything but an array of arrays of
/// non-negative integers.
DeformationVectors deformation_from_json(const std::string &text);

// Aligned plain-text forms.
std::string to_text(const Decomposition &d);
std::string to_text(const SizeReport &r, const CoverFamily *covers = nullptr);
std::string to_text(const PolarizationResult &p);
std::string to_text(const PowerMatrix &m, const std::vector<TopBase> &bases);
std::string to_text(const EqualityVerdict &v);
std::string to_text(const DeformationSizeReport &r);
std::string to_text(const FuzzReport &r);
std::string to_text(const std::vector<ExampleCheck> &checks);

} // namespace monosize
