#include "sonc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sonc/errors.hpp"

namespace sonc {

int total_degree(const ExponentVector& alpha) {
    int d = 0;
    for (int e : alpha) d += e;
    return d;
}

bool is_even_point(const ExponentVector& alpha) {
    for (int e : alpha) {
        if (e % 2 != 0) return false;
    }
    return true;
}

bool GlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SparsePoly::SparsePoly(int dimension) : dimension_(dimension) {
    if (dimension < 0) {
        throw DimensionMismatchError("polynomial dimension must be nonnegative");
    }
}

SparsePoly SparsePoly::zero(int dimension) {
    return SparsePoly(dimension);
}

SparsePoly SparsePoly::constant(int dimension, const Rational& value) {
    SparsePoly p(dimension);
    p.add_term(ExponentVector(dimension, 0), value);
    return p;
}

SparsePoly SparsePoly::monomial(int dimension, ExponentVector exponent, const Rational& coefficient) {
    SparsePoly p(dimension);
    p.add_term(exponent, coefficient);
    return p;
}

SparsePoly SparsePoly::variable(int dimension, int index) {
    if (index < 0 || index >= dimension) {
        throw DimensionMismatchError("variable index out of range");
    }
    ExponentVector e(dimension, 0);
    e[index] = 1;
    return monomial(dimension, e, Rational(1));
}

std::optional<int> SparsePoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.rbegin()->first);
}

Rational SparsePoly::coefficient(const ExponentVector& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const ExponentVector& exponent, const Rational& coefficient) {
    if (static_cast<int>(exponent.size()) != dimension_) {
        throw DimensionMismatchError("exponent vector length does not match dimension");
    }
    for (int e : exponent) {
        if (e < 0) throw SoncError("negative exponent");
    }
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<ExponentVector> SparsePoly::support() const {
    std::vector<ExponentVector> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != dimension_) {
        throw DimensionMismatchError("evaluation point length does not match dimension");
    }
    Rational acc(0);
    for (const auto& [exp, coef] : terms_) {
        Rational term = coef;
        for (int i = 0; i < dimension_; ++i) {
            if (exp[i] != 0) {
                term *= pow_rational(point[i], static_cast<unsigned long>(exp[i]));
            }
        }
        acc += term;
    }
    return acc;
}

bool SparsePoly::operator==(const SparsePoly& other) const {
    return dimension_ == other.dimension_ && terms_ == other.terms_;
}

namespace {

void require_same_dimension(const SparsePoly& p, const SparsePoly& q) {
    if (p.dimension() != q.dimension()) {
        throw DimensionMismatchError("polynomial dimensions differ");
    }
}

}  // namespace

SparsePoly operator+(const SparsePoly& p, const SparsePoly& q) {
    require_same_dimension(p, q);
    SparsePoly r = p;
    for (const auto& [e, c] : q.terms()) r.add_term(e, c);
    return r;
}

SparsePoly operator-(const SparsePoly& p, const SparsePoly& q) {
    require_same_dimension(p, q);
    SparsePoly r = p;
    for (const auto& [e, c] : q.terms()) r.add_term(e, -c);
    return r;
}

SparsePoly operator-(const SparsePoly& p) {
    SparsePoly r(p.dimension());
    for (const auto& [e, c] : p.terms()) r.add_term(e, -c);
    return r;
}

SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
    require_same_dimension(p, q);
    SparsePoly r(p.dimension());
    ExponentVector e(p.dimension());
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [eq, cq] : q.terms()) {
            for (int i = 0; i < p.dimension(); ++i) e[i] = ep[i] + eq[i];
            r.add_term(e, cp * cq);
        }
    }
    return r;
}

SparsePoly operator*(const Rational& c, const SparsePoly& p) {
    SparsePoly r(p.dimension());
    if (c == 0) return r;
    for (const auto& [e, pc] : p.terms()) r.add_term(e, c * pc);
    return r;
}

SparsePoly operator*(const SparsePoly& p, const Rational& c) {
    return c * p;
}

SparsePoly substitute(const SparsePoly& p, const std::vector<SparsePoly>& replacement) {
    if (static_cast<int>(replacement.size()) != p.dimension()) {
        throw DimensionMismatchError("substitution needs one replacement per variable");
    }
    int out_dim = p.dimension() == 0 ? 0 : replacement.front().dimension();
    for (const auto& r : replacement) {
        if (r.dimension() != out_dim) {
            throw DimensionMismatchError("replacement polynomials must share a dimension");
        }
    }
    SparsePoly result(out_dim);
    for (const auto& [exp, coef] : p.terms()) {
        SparsePoly term = SparsePoly::constant(out_dim, coef);
        for (int i = 0; i < p.dimension(); ++i) {
            for (int k = 0; k < exp[i]; ++k) term = term * replacement[i];
        }
        result = result + term;
    }
    return result;
}

SparsePoly embed(const SparsePoly& p, int dimension) {
    if (dimension < p.dimension()) {
        throw DimensionMismatchError("cannot embed into fewer variables");
    }
    SparsePoly r(dimension);
    for (const auto& [e, c] : p.terms()) {
        ExponentVector ext = e;
        ext.resize(dimension, 0);
        r.add_term(ext, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class PolyParser {
public:
    // declared < 0 means the dimension is inferred from the variables used.
    PolyParser(std::string_view text, int declared) : text_(text), declared_(declared) {}

    SparsePoly run() {
        skip_ws();
        if (at_end()) throw PolyParseError("empty polynomial text", pos_);
        parse_term(/*require_sign=*/false);
        while (true) {
            skip_ws();
            if (at_end()) break;
            parse_term(/*require_sign=*/true);
        }
        const int n = declared_ >= 0 ? declared_ : max_var_;
        SparsePoly p(n);
        for (auto& [exps, coef] : parsed_) {
            ExponentVector e(n, 0);
            for (auto [var, exp] : exps) e[var] += exp;
            p.add_term(e, coef);
        }
        return p;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool is_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (is_digit()) ++pos_;
        if (pos_ == start) throw PolyParseError("expected digits", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    Rational read_rational() {
        Integer num{read_digits()};
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            const std::size_t den_pos = pos_;
            Integer den{read_digits()};
            if (den == 0) throw PolyParseError("zero denominator", den_pos);
            return make_rational(num, den);
        }
        return Rational(num);
    }

    // var := 'x' digits; returns zero-based index.
    int read_var() {
        const std::size_t var_pos = pos_;
        ++pos_;  // consume 'x'
        if (!is_digit()) throw PolyParseError("expected variable index after 'x'", pos_);
        const std::string digits = read_digits();
        int idx = 0;
        try {
            idx = std::stoi(digits);
        } catch (const std::exception&) {
            throw PolyParseError("variable index out of range", var_pos);
        }
        if (idx < 1) throw PolyParseError("variable indices start at 1", var_pos);
        if (declared_ >= 0 && idx > declared_) {
            throw PolyParseError("unknown variable x" + digits + " in dimension " +
                                     std::to_string(declared_),
                                 var_pos);
        }
        max_var_ = std::max(max_var_, idx);
        return idx - 1;
    }

    void parse_term(bool require_sign) {
        int sign = 1;
        skip_ws();
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1;
            ++pos_;
        } else if (require_sign) {
            throw PolyParseError("expected '+' or '-' between terms", pos_);
        }
        skip_ws();
        if (at_end()) throw PolyParseError("dangling sign", pos_);

        Rational coef(sign);
        std::vector<std::pair<int, int>> factors;
        bool saw_factor = false;

        if (is_digit()) {
            coef *= read_rational();
            saw_factor = true;
            skip_ws();
            while (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                factors.push_back(read_factor());
                skip_ws();
            }
        } else if (peek() == 'x') {
            factors.push_back(read_factor());
            saw_factor = true;
            skip_ws();
            while (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                factors.push_back(read_factor());
                skip_ws();
            }
        }
        if (!saw_factor) {
            throw PolyParseError(std::string("unexpected character '") + peek() + "'", pos_);
        }
        parsed_.emplace_back(std::move(factors), coef);
    }

    std::pair<int, int> read_factor() {
        if (at_end() || peek() != 'x') {
            throw PolyParseError("expected variable", pos_);
        }
        const int var = read_var();
        int exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t exp_pos = pos_;
            try {
                exp = std::stoi(read_digits());
            } catch (const std::exception&) {
                throw PolyParseError("exponent out of range", exp_pos);
            }
        }
        return {var, exp};
    }

    std::string_view text_;
    int declared_;
    std::size_t pos_ = 0;
    int max_var_ = 0;
    std::vector<std::pair<std::vector<std::pair<int, int>>, Rational>> parsed_;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, std::optional<int> dimension) {
    int declared = -1;
    if (dimension.has_value()) {
        declared = *dimension;
        if (declared < 0) {
            throw DimensionMismatchError("declared dimension must be nonnegative");
        }
    }
    return PolyParser(text, declared).run();
}

std::string render_poly(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [exp, coef] = *it;
        const bool negative = coef < 0;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const Rational mag = abs(coef);
        const bool has_vars = total_degree(exp) > 0;
        if (!has_vars || mag != 1) {
            out << rational_to_string(mag);
            if (has_vars) out << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (exp[i] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << "x" << (i + 1);
            if (exp[i] > 1) out << "^" << exp[i];
        }
    }
    return out.str();
}

}  // namespace sonc
