#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace tdeig::cli {

using Json = nlohmann::ordered_json;

/// 17 significant digits; non-finite values become null.
[[nodiscard]] std::string format_number(double x);

/// Pretty-printed JSON with every floating-point number at 17 significant digits.
[[nodiscard]] std::string dump(const Json& doc);

[[nodiscard]] Json complex_json(std::complex<double> z);

/**
 * Complex literal: "u", "vi", "u+vi", "u-vi", "i", "-i", "u+i".
 * Spaces are ignored and parts may use scientific notation ("1e-3-2.5E1i").
 */
[[nodiscard]] std::optional<std::complex<double>> parse_complex(std::string_view text);

}  // namespace tdeig::cli
