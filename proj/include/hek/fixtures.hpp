#pragma once

#include <cstdint>
#include <random>

#include "json.hpp"

#include "hek/kummer.hpp"

namespace hek {

/**
 * Deterministic pseudo-random desk-scale inputs.  Draws go through
 * mt19937_64 with plain modulo reduction (std distributions are
 * implementation-defined and would break byte-for-byte reproducibility
 * across standard libraries).  Heights stay at or below 30.
 */
Rat random_rat(std::mt19937_64& rng);

/** Six distinct rationals; may or may not give an independent radical basis. */
std::array<Rat, 6> random_branch_tuple(std::mt19937_64& rng);

/** Rejection-samples until the derived radical basis is independent. */
std::array<Rat, 6> random_independent_branch(std::mt19937_64& rng);

/** Three distinct rationals avoiding 0 and 1. */
std::array<Rat, 3> random_lambda_triple(std::mt19937_64& rng);

/**
 * Fixture corpus: `count` independent branch sextuples and lambda triples,
 * plus the degenerate sextuples rejected along the way (kept for fallback
 * tests).  Same seed, same corpus, byte for byte.
 */
struct FixtureCorpus {
    std::uint64_t seed = 0;
    int count = 0;
    std::vector<std::array<Rat, 6>> sextuples;
    std::vector<std::array<Rat, 3>> lambda_triples;
    std::vector<std::array<Rat, 6>> degenerate;
};

FixtureCorpus make_fixtures(std::uint64_t seed, int count);

nlohmann::json corpus_to_json(const FixtureCorpus& c);

}  // namespace hek
