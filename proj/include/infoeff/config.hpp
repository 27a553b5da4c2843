#pragma once

#include <cstdint>

namespace infoeff {

long factorial(int d);

enum class BandMode { Gaussian, Quantile };

// Sweep parameters. Defaults follow the analysis this tool reproduces:
// d=4 ordinal patterns over 500-day windows, 30 shuffle surrogates at 95%
// confidence, 360-day efficiency window, >600 returns / >460 track points.
struct AnalysisConfig {
    int embedding_dim = 4;       // d
    int window = 500;            // w, days
    int surrogates = 30;         // m, shuffle realizations per window
    double confidence = 0.95;    // two-sided band coverage
    int efficiency_window = 360; // w_E, days
    int min_returns = 600;       // keep assets with strictly more returns than this
    int min_track = 460;         // dynamics filter: strictly more (H,C) points than this
    std::uint64_t master_seed = 42;
    BandMode band_mode = BandMode::Gaussian;

    // Throws ValidationError on any violated constraint, including d!*10 <= w.
    void validate() const;
};

}  // namespace infoeff
