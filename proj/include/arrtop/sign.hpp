#ifndef ARRTOP_SIGN_HPP
#define ARRTOP_SIGN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrtop/error.hpp"

namespace arrtop {

// Sign vectors over {+,-,0} are the covectors of a real arrangement; complex
// sign vectors over {+,-,0,i,j} (j denotes -i) label points of the
// complexification.  Both are stored as validated strings so that
// serialization, ordering and hashing are the obvious ones.  All indices in
// the C++ API are 0-based; rendered reports and JSON use 1-based positions.

enum class Sign : char { plus = '+', minus = '-', zero = '0' };

inline char sign_char(Sign s) { return static_cast<char>(s); }
inline Sign sign_from_int(int v) {
    return v > 0 ? Sign::plus : (v < 0 ? Sign::minus : Sign::zero);
}
inline Sign sign_opposite(Sign s) {
    if (s == Sign::plus) return Sign::minus;
    if (s == Sign::minus) return Sign::plus;
    return Sign::zero;
}

class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::string text) : s_(std::move(text)) {
        for (char c : s_)
            if (c != '+' && c != '-' && c != '0')
                fail(ErrorKind::Parse, "bad sign vector '" + s_ + "'");
    }
    static SignVector zero(std::size_t n) { return SignVector(std::string(n, '0')); }

    std::size_t size() const { return s_.size(); }
    Sign operator[](std::size_t i) const { return static_cast<Sign>(s_[i]); }
    void set(std::size_t i, Sign v) { s_[i] = sign_char(v); }
    const std::string& str() const { return s_; }

    bool is_zero() const { return s_.find_first_not_of('0') == std::string::npos; }
    bool nowhere_zero() const { return s_.find('0') == std::string::npos; }
    std::vector<std::size_t> zero_set() const {
        std::vector<std::size_t> z;
        for (std::size_t i = 0; i < s_.size(); ++i)
            if (s_[i] == '0') z.push_back(i);
        return z;
    }

    friend bool operator==(const SignVector&, const SignVector&) = default;
    friend bool operator<(const SignVector& a, const SignVector& b) { return a.s_ < b.s_; }

private:
    std::string s_;
};

SignVector opposite(const SignVector& x);

// X o Y: the first nonzero wins coordinatewise.
SignVector compose(const SignVector& x, const SignVector& y);

// S(X, Y) = { i : X_i = -Y_i != 0 }.
std::vector<std::size_t> separation(const SignVector& x, const SignVector& y);

// Componentwise order with 0 < + and 0 < -.
bool sign_leq(const SignVector& x, const SignVector& y);

struct AxiomReport {
    bool l0 = false;   // zero vector present
    bool l1 = false;   // closed under opposite
    bool l2 = false;   // closed under composition
    bool l3 = false;   // elimination along separating indices
    std::string witness;  // human-readable description of the first failure
    bool pass() const { return l0 && l1 && l2 && l3; }
};

AxiomReport check_covector_axioms(const std::vector<SignVector>& covectors);

// Chain-length statistics of a covector set under sign_leq.  The two counts
// settle the rank convention side by side: for an essential arrangement in
// R^l the edge count is l and the element count l + 1.
struct ChainStats {
    std::size_t rank_edges = 0;
    std::size_t rank_elements = 0;
};
ChainStats longest_chain(const std::vector<SignVector>& covectors);

// --- complex signs -----------------------------------------------------

enum class ComplexSign : char { plus = '+', minus = '-', zero = '0', im = 'i', neg_im = 'j' };

inline char complex_sign_char(ComplexSign s) { return static_cast<char>(s); }

// Order: 0 below everything, + and - each below both i and j, i and j
// incomparable, + and - incomparable.
bool complex_sign_leq(ComplexSign a, ComplexSign b);

class ComplexSignVector {
public:
    ComplexSignVector() = default;
    explicit ComplexSignVector(std::string text) : s_(std::move(text)) {
        for (char c : s_)
            if (c != '+' && c != '-' && c != '0' && c != 'i' && c != 'j')
                fail(ErrorKind::Parse, "bad complex sign vector '" + s_ + "'");
    }

    std::size_t size() const { return s_.size(); }
    ComplexSign operator[](std::size_t i) const { return static_cast<ComplexSign>(s_[i]); }
    void set(std::size_t i, ComplexSign v) { s_[i] = complex_sign_char(v); }
    const std::string& str() const { return s_; }
    bool nowhere_zero() const { return s_.find('0') == std::string::npos; }

    friend bool operator==(const ComplexSignVector&, const ComplexSignVector&) = default;
    friend bool operator<(const ComplexSignVector& a, const ComplexSignVector& b) {
        return a.s_ < b.s_;
    }

private:
    std::string s_;
};

bool complex_sign_leq(const ComplexSignVector& x, const ComplexSignVector& y);

} // namespace arrtop

#endif
