#include "streamlab/kernels.hpp"

#include <exception>
#include <unordered_map>

#include "streamlab/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace streamlab::kernels {

namespace {

std::string padded(std::string_view row, std::size_t radius) {
  std::string p(radius, kBoundary);
  p.append(row);
  return p;
}

}  // namespace

std::string apply_prefix_serial(const LocalRule& rule, std::string_view row) {
  const std::size_t n = rule.radius();
  if (row.size() <= n) return {};
  const std::string p = padded(row, n);
  std::string out(row.size() - n, '\0');
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rule(std::string_view(p).substr(i, rule.width()));
  return out;
}

std::string apply_prefix_parallel(const LocalRule& rule, std::string_view row) {
  const std::size_t n = rule.radius();
  if (row.size() <= n) return {};
  const std::string p = padded(row, n);
  std::string out(row.size() - n, '\0');
  const auto count = static_cast<long>(out.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = rule(std::string_view(p).substr(static_cast<std::size_t>(i), rule.width()));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

RadiusScan scan_radius(std::string_view source, std::string_view target, std::size_t radius, std::size_t horizon) {
  if (source.size() < horizon + radius || target.size() < horizon)
    throw Error("scan_radius: prefixes shorter than the horizon");
  const std::string p = padded(source.substr(0, horizon + radius), radius);
  const std::size_t width = 2 * radius + 1;
  std::unordered_map<std::string_view, std::size_t> first_seen;
  first_seen.reserve(std::min<std::size_t>(horizon, std::size_t{1} << 16));
  for (std::size_t i = 0; i < horizon; ++i) {
    auto [it, fresh] = first_seen.emplace(std::string_view(p).substr(i, width), i);
    if (!fresh && target[it->second] != target[i]) return {radius, i + 1, Conflict{radius, it->second, i}};
  }
  return {radius, horizon, std::nullopt};
}

std::vector<RadiusScan> sweep_serial(std::string_view source, std::string_view target, std::size_t max_radius,
                                     std::size_t horizon) {
  std::vector<RadiusScan> out;
  for (std::size_t n = 0; n <= max_radius; ++n) {
    out.push_back(scan_radius(source, target, n, horizon));
    if (!out.back().conflict) break;
  }
  return out;
}

std::vector<RadiusScan> sweep_parallel(std::string_view source, std::string_view target, std::size_t max_radius,
                                       std::size_t horizon) {
  if (source.size() < horizon + max_radius || target.size() < horizon)
    throw Error("sweep: prefixes shorter than the horizon");
  std::vector<std::optional<RadiusScan>> all(max_radius + 1);
  const auto count = static_cast<long>(all.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long n = 0; n < count; ++n)
    all[static_cast<std::size_t>(n)] = scan_radius(source, target, static_cast<std::size_t>(n), horizon);
  // Keep exactly what the serial sweep would have produced.
  std::vector<RadiusScan> out;
  for (auto& r : all) {
    out.push_back(*r);
    if (!r->conflict) break;
  }
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace streamlab::kernels
