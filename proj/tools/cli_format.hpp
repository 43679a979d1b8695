#pragma once

#include <gpring/error.hpp>
#include <gpring/factorization.hpp>
#include <gpring/family.hpp>
#include <gpring/series.hpp>

#include <json.hpp>

namespace gpring::cli {

using nlohmann::json;

int exit_code(ErrorKind kind) noexcept;

json graph_json(const Graph &g);
json family_json(const GraphFamily &f);
json series_json(const Series &s);
json registry_json(const PrimeRegistry &registry);
json bound_json(std::optional<std::size_t> bound);

} // namespace gpring::cli
