#pragma once

#include "monosize/caps.hpp"
#include "monosize/random.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace monosize {

struct FuzzConfig {
    std::uint64_t seed = 0;
    std::size_t count = 500;
    RandomBounds bounds;
    /// Property names to leave out (see fuzz_properties()).
    std::vector<std::string> skip;
};

struct Counterexample {
    std::size_t instance = 0;
    std::string ideal;
    std::size_t n = 0;
    std::string property;
    std::string observed;
};

struct FuzzReport {
    std::size_t instances = 0;
    /// property -> instances on which it was checked
    std::map<std::string, std::size_t> checked;
    std::vector<Counterexample> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

/// decomposition, bound, bar-identity, equality-iff, radical-invariance,
/// deformation-inequality
const std::vector<std::string> &fuzz_properties();

/// Draws `count` ideals with random_ideal from one SplitMix64 stream seeded
/// with `seed` and checks every property not skipped.
FuzzReport run_fuzz(const FuzzConfig &config, const Caps &caps = default_caps());

struct ExampleCheck {
    std::string example;
    std::string quantity;
    std::string expected;
    std::string observed;
    bool pass = false;
};

/// Replays the built-in corpus of published worked examples and compares
/// every reported value.
std::vector<ExampleCheck> run_examples(const Caps &caps = default_caps());

} // namespace monosize
