#include "pendulum/alpha_poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace pendulum {

int total_degree(const Exponents& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    for (int i = 0; i < kMaxUnknowns; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

AlphaPoly::AlphaPoly(const BigRational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

AlphaPoly AlphaPoly::unknown(int j) {
    if (j < 1 || j > kMaxUnknowns) throw std::out_of_range("AlphaPoly::unknown: index outside a1..a8");
    Exponents e{};
    e[j - 1] = 1;
    return monomial(e, BigRational(1));
}

AlphaPoly AlphaPoly::monomial(const Exponents& e, const BigRational& c) {
    AlphaPoly p;
    p.add_term(e, c);
    return p;
}

void AlphaPoly::add_term(const Exponents& e, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BigRational AlphaPoly::constant_term() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? BigRational(0) : it->second;
}

int AlphaPoly::degree_in(int j) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[j - 1]));
    return d;
}

int AlphaPoly::highest_unknown() const {
    int h = 0;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < kMaxUnknowns; ++i)
            if (e[i] != 0) h = std::max(h, i + 1);
    return h;
}

int AlphaPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, pendulum::total_degree(e));
    return d;
}

AlphaPoly AlphaPoly::substitute(int j, const BigRational& value) const {
    AlphaPoly out;
    for (const auto& [e, c] : terms_) {
        Exponents reduced = e;
        const int power = reduced[j - 1];
        reduced[j - 1] = 0;
        BigRational factor(1);
        for (int k = 0; k < power; ++k) factor *= value;
        out.add_term(reduced, c * factor);
    }
    return out;
}

std::pair<AlphaPoly, AlphaPoly> AlphaPoly::affine_parts(int j) const {
    AlphaPoly c0, c1;
    for (const auto& [e, c] : terms_) {
        if (e[j - 1] == 0) {
            c0.add_term(e, c);
        } else if (e[j - 1] == 1) {
            Exponents reduced = e;
            reduced[j - 1] = 0;
            c1.add_term(reduced, c);
        }
    }
    return {c0, c1};
}

double AlphaPoly::evaluate(const std::vector<double>& values) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.to_double();
        for (int i = 0; i < kMaxUnknowns; ++i) {
            if (e[i] == 0) continue;
            const double v = static_cast<std::size_t>(i) < values.size() ? values[i] : 0.0;
            term *= std::pow(v, e[i]);
        }
        sum += term;
    }
    return sum;
}

namespace {

std::string monomial_str(const Exponents& e) {
    std::string s;
    for (int i = 0; i < kMaxUnknowns; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'a' + std::to_string(i + 1);
        if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string AlphaPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool constant = pendulum::total_degree(e) == 0;
        const BigRational mag = c.sign() < 0 ? -c : c;
        if (!first) out += ' ';
        if (c.sign() < 0)
            out += '-';
        else if (!first)
            out += '+';
        const bool unit = mag == BigRational(1);
        if (constant) {
            out += mag.str();
        } else {
            if (!unit) out += mag.str() + '*';
            out += monomial_str(e);
        }
        first = false;
    }
    return out;
}

AlphaPoly AlphaPoly::parse(std::string_view text) {
    AlphaPoly out;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    const auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string("AlphaPoly::parse: ") + what + " in '" + std::string(text) + "'");
    };
    skip_ws();
    if (i == text.size()) fail("empty input");
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        }
        BigRational coeff(1);
        Exponents e{};
        bool have_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
            coeff = BigRational::parse(text.substr(i, j - i));
            i = j;
            have_coeff = true;
        }
        bool expect_factor = !have_coeff;
        if (i < text.size() && text[i] == '*') {
            ++i;
            expect_factor = true;
        }
        while (expect_factor) {
            if (i >= text.size() || text[i] != 'a') fail("expected unknown");
            ++i;
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) fail("missing unknown index");
            const int idx = std::stoi(std::string(text.substr(i, j - i)));
            if (idx < 1 || idx > kMaxUnknowns) fail("unknown index out of range");
            i = j;
            int power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) fail("missing exponent");
                power = std::stoi(std::string(text.substr(i, j - i)));
                i = j;
            }
            e[idx - 1] = static_cast<std::uint8_t>(e[idx - 1] + power);
            expect_factor = i < text.size() && text[i] == '*';
            if (expect_factor) ++i;
        }
        out.add_term(e, sign < 0 ? -coeff : coeff);
        skip_ws();
        if (i < text.size() && text[i] != '+' && text[i] != '-') fail("unexpected character");
    }
    return out;
}

AlphaPoly AlphaPoly::operator-() const {
    AlphaPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

AlphaPoly& AlphaPoly::operator*=(const BigRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
    AlphaPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e{};
            for (int i = 0; i < kMaxUnknowns; ++i) {
                const int s = ea[i] + eb[i];
                if (s > 255) throw std::overflow_error("AlphaPoly: exponent overflow");
                e[i] = static_cast<std::uint8_t>(s);
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool AlphaPoly::valid() const {
    for (const auto& [e, c] : terms_)
        if (c.is_zero()) return false;
    return true;
}

}  // namespace pendulum
