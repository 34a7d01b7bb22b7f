#pragma once

// Seeded property checks over the built-in fixtures and random instances.

#include <cstdint>
#include <string>
#include <vector>

namespace polc {

struct LawFailure {
    std::string law;
    std::string reproduction; // seed, inputs, expected/actual
};

struct LawSuiteReport {
    std::string suite;
    std::size_t cases = 0;
    std::vector<LawFailure> failures;
    std::vector<std::string> notes; // per-law case counts and observed maxima
};

inline constexpr std::size_t default_law_samples = 200;

const std::vector<std::string>& law_suites();

/// suite ∈ law_suites() or "all". Deterministic in (suite, seed, samples).
LawSuiteReport run_laws(const std::string& suite, std::uint64_t seed,
                        std::size_t samples = default_law_samples);

} // namespace polc
