#pragma once

#include <cstdint>

#include "lsfc/matrix.hpp"

namespace lsfc {

/// splitmix64: small deterministic stream, identical across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

    /// Prime fields: uniform residue. Rationals: small integer in [-9, 9].
    Scalar next_scalar(const Field& f) {
        if (f.is_prime_field())
            return Scalar::from_int(f, static_cast<std::int64_t>(
                                           next_below(static_cast<std::uint64_t>(f.modulus()))));
        return Scalar::from_int(f, static_cast<std::int64_t>(next_below(19)) - 9);
    }

    Matrix next_matrix(std::size_t rows, std::size_t cols, const Field& f) {
        Matrix m(rows, cols, f);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = next_scalar(f);
        return m;
    }

private:
    std::uint64_t state_;
};

} // namespace lsfc
