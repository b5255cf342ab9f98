#include "sgc/fixed.h"

#include <cstdlib>

#include "sgc/errors.h"

using namespace std;

namespace sgc {

namespace {
// Large enough for any desk-scale sum, small enough that additions of two
// in-range values cannot wrap int64.
constexpr int64_t kMaxMicros = 4000000000000000000LL;

[[noreturn]] void bad_number(const string& text) {
    throw Error("malformed decimal number: '" + text + "'");
}
}  // namespace

Fixed Fixed::parse(const string& text) {
    size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    size_t digits_start = i;
    int64_t units = 0;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        units = units * 10 + (text[i] - '0');
        if (units > kMaxMicros / kScale)
            throw Error("decimal number out of range: '" + text + "'");
        ++i;
    }
    if (i == digits_start)
        bad_number(text);
    int64_t frac = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        size_t frac_start = i;
        int64_t scale = kScale;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
            if (scale == 1)
                throw Error("at most 6 fractional digits supported: '" + text + "'");
            scale /= 10;
            frac += (text[i] - '0') * scale;
            ++i;
        }
        if (i == frac_start)
            bad_number(text);
    }
    if (i != text.size())
        bad_number(text);
    int64_t micros = units * kScale + frac;
    return Fixed(negative ? -micros : micros);
}

string Fixed::str() const {
    int64_t m = micros_;
    string sign;
    if (m < 0) {
        sign = "-";
        m = -m;
    }
    string result = sign + to_string(m / kScale);
    int64_t frac = m % kScale;
    if (frac != 0) {
        string digits = to_string(frac);
        digits.insert(digits.begin(), 6 - digits.size(), '0');
        while (digits.back() == '0')
            digits.pop_back();
        result += "." + digits;
    }
    return result;
}

Fixed Fixed::operator+(Fixed other) const {
    int64_t sum = micros_ + other.micros_;
    if ((micros_ > 0 && other.micros_ > 0 && sum < 0) ||
        (micros_ < 0 && other.micros_ < 0 && sum > 0) ||
        sum > kMaxMicros || sum < -kMaxMicros)
        throw Error("fixed-point overflow in addition");
    return Fixed(sum);
}

Fixed Fixed::operator-(Fixed other) const {
    return *this + Fixed(-other.micros_);
}

}  // namespace sgc
