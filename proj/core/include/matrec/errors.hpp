#pragma once

#include <stdexcept>
#include <string>

namespace matrec {

// Feature-vector norm below the epsilon guard; callers decide the fallback.
struct DegenerateFeatureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unknown user or item at prediction time.
struct ColdStartError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File-level parse failures; message carries path and line number.
struct IngestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Semantically bad data that parsed fine (e.g. all-zero weights for a user).
struct InvalidDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linear algebra failure (singular solve, non-finite result).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A contract between components was violated (split coverage, unfitted
// calibration, mismatched model file).
struct InvalidStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace matrec
