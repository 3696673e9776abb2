#pragma once

#include "cayley/report.hpp"
#include "cayley/spheres.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cayley {

/// Suite names accepted by run_suite: algebra, imspace, forms, g2star,
/// s24, s33, stereo, r8, all.
std::vector<std::string> suite_names();

/// Runs the named suite deterministically. The optional point list replays
/// the sphere suites on fixed inputs (its kind must match the suite).
/// Throws std::invalid_argument for unknown suites and std::runtime_error
/// for unreadable point lists.
VerificationReport run_suite(const std::string& name, int trials, std::uint64_t seed,
                             const std::optional<std::string>& points_path = std::nullopt);

VerificationReport algebra_suite(int trials, std::uint64_t seed);
VerificationReport imspace_suite(int trials, std::uint64_t seed);
VerificationReport forms_suite(int trials, std::uint64_t seed);
VerificationReport g2star_suite(int trials, std::uint64_t seed);
VerificationReport sphere_suite(SphereKind kind, int trials, std::uint64_t seed,
                                const std::vector<SpherePoint>* points = nullptr);
VerificationReport stereo_suite(int trials, std::uint64_t seed);
VerificationReport r8_suite(int trials, std::uint64_t seed);

/// Identity checks of the algebra on pseudo-random tuples (Moufang-type
/// identities, alternativity, and the composition law).
VerificationReport identity_suite(int trials, std::uint64_t seed);

/// Double-cross identities for a unit or anti-unit normal vector n and
/// arbitrary Y, Z. Rejects n with g(n,n) not in {1,-1}.
VerificationReport n_identities(const ImVector& n, const ImVector& y, const ImVector& z);

} // namespace cayley
