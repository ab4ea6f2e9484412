#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedgrowth/filtration.hpp"
#include "gradedgrowth/gs.hpp"

namespace gradedgrowth {

/// Resolved run configuration, echoed into every output.
using Config = std::vector<std::pair<std::string, std::string>>;

/// "# key=value" lines, then rows n, dim varpi^n, r_n, r_n^(1/n). The
/// ideal dimension needs the algebra dimension `total`; "-" without it.
std::string growth_tsv(const Config& config, const std::vector<std::size_t>& dims,
                       std::optional<std::uint64_t> total = std::nullopt);

/// Puts {"config": ...} in front of a JSON object produced elsewhere.
std::string with_config(const Config& config, const std::string& json_text);

std::string growth_report_json(const Config& config, const GrowthReport& report,
                               const std::vector<std::pair<std::string, std::string>>& extra = {});

std::string gs_certificate_json(const Config& config, const GsCertificate& cert);
GsCertificate parse_gs_certificate(const std::string& text);

}  // namespace gradedgrowth
