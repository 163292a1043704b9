#pragma once

#include <random>
#include <vector>

#include "copwin/ordinal.hpp"
#include "copwin/symbolic.hpp"

namespace copwin {

/// Uniform-ish random ordinal strictly below bound: picks a random CNF
/// prefix of the bound, shrinks one coefficient, and pads with smaller
/// terms. Every value below bound is reachable; the distribution favors
/// the boundary strata the case splits care about.
Ordinal random_ordinal_below(const Ordinal& bound, std::mt19937_64& rng);

/// Stratified sample of N[u]: always includes the path neighbors and
/// stay, plus boundary coordinates (0, 1, 2), coordinates of u and v
/// with successors, limit points below gamma, and random CNF ordinals.
/// Vertices adversarial for the cop (outside N[v]) are kept when they
/// arise; dedup preserves first-seen order so draws stay reproducible.
std::vector<SymbolicVertex> sample_closed_neighborhood(
    const SymbolicGraph& g, const SymbolicVertex& u, const SymbolicVertex& v,
    std::mt19937_64& rng, std::size_t target);

}  // namespace copwin
