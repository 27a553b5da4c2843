#include "infoeff/config.hpp"

#include <string>

#include "infoeff/errors.hpp"

namespace infoeff {

long factorial(int d) {
    long f = 1;
    for (int i = 2; i <= d; ++i) f *= i;
    return f;
}

void AnalysisConfig::validate() const {
    if (embedding_dim < 2 || embedding_dim > 8)
        throw ValidationError("embedding dimension must be in [2, 8], got " + std::to_string(embedding_dim));
    if (window < 1) throw ValidationError("window must be positive");
    if (factorial(embedding_dim) * 10 > window)
        throw ValidationError("window too small for embedding dimension: need d!*10 <= w, got d=" +
                              std::to_string(embedding_dim) + ", w=" + std::to_string(window));
    if (surrogates < 2) throw ValidationError("surrogate count must be at least 2");
    if (!(confidence > 0.0 && confidence < 1.0)) throw ValidationError("confidence must lie in (0, 1)");
    if (efficiency_window < 1) throw ValidationError("efficiency window must be positive");
    if (min_returns < 1) throw ValidationError("min-returns must be positive");
    if (min_track < 1) throw ValidationError("min-track must be positive");
}

}  // namespace infoeff
