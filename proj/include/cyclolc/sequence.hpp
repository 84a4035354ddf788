#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclolc/common.hpp"
#include "cyclolc/cyclotomy.hpp"
#include "cyclolc/gf2poly.hpp"

namespace cyclolc {

enum class SequenceFormat { bits, hex, csv };

inline SequenceFormat parse_sequence_format(const std::string& s) {
    if (s == "bits") return SequenceFormat::bits;
    if (s == "hex") return SequenceFormat::hex;
    if (s == "csv") return SequenceFormat::csv;
    throw std::invalid_argument("unknown sequence format: " + s);
}

// One period of the binary sequence, bit-packed 64 per word. bit(i) = s_i = 1
// exactly when i lies in the characteristic set C_1^{(p^n)}.
class BinarySequence {
  public:
    static BinarySequence generate(const Cyclotomy& cy) {
        BinarySequence seq;
        seq.params_ = cy.params();
        seq.n_ = cy.period();
        seq.w_.assign((seq.n_ + 63) / 64, 0);
        for (u64 i = 0; i < seq.n_; ++i)
            if (cy.in_c1(i)) {
                seq.w_[i / 64] |= u64{1} << (i % 64);
                ++seq.weight_;
            }
        return seq;
    }

    u64 size() const { return n_; }
    u64 weight() const { return weight_; }
    bool bit(u64 i) const { return (w_[i / 64] >> (i % 64)) & 1; }
    const CyclotomicParams& params() const { return params_; }
    const std::vector<u64>& words() const { return w_; }

    // S(x) = s_0 + s_1 x + ... + s_{N-1} x^{N-1}
    Gf2Poly generating_polynomial() const {
        Gf2Poly s = Gf2Poly::from_raw_words(w_);
        return s;
    }

    // First line of every file format: the parameter echo "p,n,e,b,g".
    std::string header_line() const {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%llu,%u,%llu,%llu,%llu",
                      static_cast<unsigned long long>(params_.p), params_.n,
                      static_cast<unsigned long long>(params_.e),
                      static_cast<unsigned long long>(params_.b),
                      static_cast<unsigned long long>(params_.g));
        return buf;
    }

    std::string to_ascii() const {
        std::string s;
        s.reserve(n_);
        for (u64 i = 0; i < n_; ++i) s += bit(i) ? '1' : '0';
        return s;
    }

    // Bytes in sequence order, s_{8t} in the low bit of byte t, two hex
    // digits per byte.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        const u64 nbytes = (n_ + 7) / 8;
        s.reserve(2 * nbytes);
        for (u64 t = 0; t < nbytes; ++t) {
            const unsigned byte = (w_[t / 8] >> (8 * (t % 8))) & 0xFF;
            s += digits[byte >> 4];
            s += digits[byte & 0xF];
        }
        return s;
    }

    std::string to_csv() const {
        std::string s = "index,bit\n";
        for (u64 i = 0; i < n_; ++i) {
            s += std::to_string(i);
            s += bit(i) ? ",1\n" : ",0\n";
        }
        return s;
    }

    // Full file payload in the requested format, header line included.
    std::string serialize(SequenceFormat fmt) const {
        std::string out = header_line();
        out += '\n';
        switch (fmt) {
            case SequenceFormat::bits: out += to_ascii(); out += '\n'; break;
            case SequenceFormat::hex: out += to_hex(); out += '\n'; break;
            case SequenceFormat::csv: out += to_csv(); break;
        }
        return out;
    }

  private:
    CyclotomicParams params_;
    u64 n_ = 0;
    u64 weight_ = 0;
    std::vector<u64> w_;
};

}  // namespace cyclolc
