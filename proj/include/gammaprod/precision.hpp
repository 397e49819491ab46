#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace gammaprod {

/// Working precision for every BigFloat computation.
///
/// Kernels run at `working_bits()` = prec_bits + guard_bits and return values
/// carrying that precision; accuracy contracts and decimal rendering are stated
/// at `prec_bits`.
class PrecisionContext {
public:
    static constexpr int kMinPrecBits = 64;
    static constexpr int kDefaultPrecBits = 256;
    static constexpr int kDefaultGuardBits = 32;

    PrecisionContext() = default;

    explicit PrecisionContext(int prec_bits, int guard_bits = kDefaultGuardBits)
        : prec_bits_(prec_bits), guard_bits_(guard_bits) {
        if (prec_bits < kMinPrecBits)
            throw std::invalid_argument("precision must be at least 64 bits, got " +
                                        std::to_string(prec_bits));
        if (guard_bits < 0)
            throw std::invalid_argument("guard bits must be non-negative");
    }

    /// bits = ceil(digits * 3.3219) + 16
    static PrecisionContext from_digits(int digits, int guard_bits = kDefaultGuardBits) {
        if (digits < 1) throw std::invalid_argument("digit count must be positive");
        const int bits = static_cast<int>(std::ceil(digits * 3.3219)) + 16;
        return PrecisionContext(bits < kMinPrecBits ? kMinPrecBits : bits, guard_bits);
    }

    int prec_bits() const noexcept { return prec_bits_; }
    int guard_bits() const noexcept { return guard_bits_; }
    int working_bits() const noexcept { return prec_bits_ + guard_bits_; }

    /// Decimal digits that the reporting precision resolves.
    int decimal_digits() const noexcept {
        return static_cast<int>(std::floor(prec_bits_ * 0.30102999566398120));
    }

    PrecisionContext with_prec_bits(int prec_bits) const {
        return PrecisionContext(prec_bits, guard_bits_);
    }

    friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

private:
    int prec_bits_ = kDefaultPrecBits;
    int guard_bits_ = kDefaultGuardBits;
};

} // namespace gammaprod
