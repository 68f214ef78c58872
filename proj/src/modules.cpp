#include "weightlab/modules.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace weightlab {

using nlohmann::json;

// ---------------------------------------------------------------------------
// GL2Module

GL2Module::GL2Module(const Rational& l1, const Rational& l2)
    : lambda1(l1), lambda2(l2) {
    const Rational diff = l1 - l2;
    if (!diff.is_integer() || diff.sign() < 0)
        throw NotDominant("highest weight needs lambda1 - lambda2 in Z_{>=0}, got " +
                          diff.str());
    n = diff.to_long();
}

Weight2 GL2Module::weight_of(long i) const {
    if (i < 0 || i > n)
        throw IndexOutOfRange("fiber index " + std::to_string(i) + " outside 0.." +
                              std::to_string(n));
    return Weight2{lambda1 - Rational(i), lambda2 + Rational(i)};
}

std::string gl2_gen_name(GL2Gen g) {
    switch (g) {
        case GL2Gen::E11: return "E11";
        case GL2Gen::E12: return "E12";
        case GL2Gen::E21: return "E21";
        case GL2Gen::E22: return "E22";
    }
    return "?";
}

std::map<long, Rational> gl2_act(GL2Gen e, long i, const GL2Module& mod) {
    if (i < 0 || i > mod.n)
        throw IndexOutOfRange("fiber index " + std::to_string(i) + " outside 0.." +
                              std::to_string(mod.n));
    std::map<long, Rational> out;
    auto put = [&out](long idx, const Rational& c) {
        if (!c.is_zero()) out.emplace(idx, c);
    };
    switch (e) {
        case GL2Gen::E12:
            if (i > 0) put(i - 1, Rational(i));
            break;
        case GL2Gen::E21:
            if (i < mod.n) put(i + 1, Rational(mod.n - i));
            break;
        case GL2Gen::E11:
            put(i, mod.lambda1 - Rational(i));
            break;
        case GL2Gen::E22:
            put(i, mod.lambda2 + Rational(i));
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// WeightWindow

WeightWindow WeightWindow::square(long lo, long hi, long margin) {
    WeightWindow w;
    w.lo1 = w.lo2 = lo;
    w.hi1 = w.hi2 = hi;
    w.margin = margin;
    return w;
}

WeightWindow WeightWindow::parse(const std::string& text) {
    // "lo1,lo2:hi1,hi2:margin"
    const auto bad = [&text]() {
        return ParseError("window must look like \"lo1,lo2:hi1,hi2:margin\", got \"" +
                          text + "\"");
    };
    std::vector<std::string> colon_parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            colon_parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    colon_parts.push_back(cur);
    if (colon_parts.size() != 3) throw bad();
    auto parse_pair = [&bad](const std::string& s, long& a, long& b) {
        const auto comma = s.find(',');
        if (comma == std::string::npos) throw bad();
        try {
            a = std::stol(s.substr(0, comma));
            b = std::stol(s.substr(comma + 1));
        } catch (const std::exception&) {
            throw bad();
        }
    };
    WeightWindow w;
    parse_pair(colon_parts[0], w.lo1, w.lo2);
    parse_pair(colon_parts[1], w.hi1, w.hi2);
    try {
        w.margin = std::stol(colon_parts[2]);
    } catch (const std::exception&) {
        throw bad();
    }
    if (w.margin < 0 || w.lo1 > w.hi1 || w.lo2 > w.hi2) throw bad();
    return w;
}

bool WeightWindow::contains(long o1, long o2, int rank) const {
    if (o1 < lo1 || o1 > hi1) return false;
    if (rank >= 2 && (o2 < lo2 || o2 > hi2)) return false;
    return true;
}

bool WeightWindow::interior(long o1, long o2, int rank) const {
    if (o1 < lo1 + margin || o1 > hi1 - margin) return false;
    if (rank >= 2 && (o2 < lo2 + margin || o2 > hi2 - margin)) return false;
    return true;
}

WeightWindow WeightWindow::widened_margin(long extra) const {
    WeightWindow w = *this;
    w.margin += extra;
    return w;
}

std::vector<std::pair<long, long>> WeightWindow::offsets(int rank, bool interior_only) const {
    std::vector<std::pair<long, long>> out;
    const long a1 = interior_only ? lo1 + margin : lo1;
    const long b1 = interior_only ? hi1 - margin : hi1;
    if (rank == 1) {
        for (long o1 = a1; o1 <= b1; ++o1) out.emplace_back(o1, 0);
        return out;
    }
    const long a2 = interior_only ? lo2 + margin : lo2;
    const long b2 = interior_only ? hi2 - margin : hi2;
    for (long o1 = a1; o1 <= b1; ++o1)
        for (long o2 = a2; o2 <= b2; ++o2) out.emplace_back(o1, o2);
    return out;
}

std::string WeightWindow::str() const {
    std::ostringstream out;
    out << lo1 << "," << lo2 << ":" << hi1 << "," << hi2 << ":" << margin;
    return out.str();
}

// ---------------------------------------------------------------------------
// TensorModuleSpec

TensorModuleSpec TensorModuleSpec::make(Algebra alg, Weight2 nu, Weight2 lambda,
                                        std::map<int, JSign> J,
                                        std::optional<Rational> c, bool trivial) {
    TensorModuleSpec s;
    s.alg = alg;
    s.nu = std::move(nu);
    s.lambda = std::move(lambda);
    s.J = std::move(J);
    s.c = std::move(c);
    s.trivial = trivial;

    const int rank = algebra_rank(alg);
    if (rank == 1) {
        if (!s.nu.c2.is_zero() || !s.lambda.c2.is_zero())
            throw HypothesisViolated("rank-1 spec must keep the second coordinate zero");
    } else {
        const Rational diff = s.lambda.c1 - s.lambda.c2;
        if (!diff.is_integer() || diff.sign() < 0)
            throw NotDominant("rank-2 spec needs lambda1 - lambda2 in Z_{>=0}, got " +
                              diff.str());
    }
    for (const auto& [dir, sign] : s.J) {
        (void)sign;
        if (dir < 1 || dir > rank)
            throw HypothesisViolated("J direction " + std::to_string(dir) +
                                     " out of range for rank " + std::to_string(rank));
        const Rational diff = (dir == 1) ? s.lambda.c1 - s.nu.c1 : s.lambda.c2 - s.nu.c2;
        if (!diff.is_integer())
            throw HypothesisViolated("J direction " + std::to_string(dir) +
                                     " requires an integral lambda-nu offset, got " +
                                     diff.str());
    }
    if (algebra_has_scalars(alg)) {
        if (!s.c.has_value())
            throw HypothesisViolated("central charge c required for " + algebra_name(alg));
    } else if (s.c.has_value()) {
        throw HypothesisViolated("central charge c not allowed for " + algebra_name(alg));
    }
    if (s.trivial) {
        if (!s.lambda.c1.is_zero() || !s.lambda.c2.is_zero())
            throw HypothesisViolated("trivial spec requires lambda = 0");
        if (!s.nu.c1.is_integer() || !s.nu.c2.is_integer())
            throw HypothesisViolated("trivial spec requires weight 0 in the coset");
        if (!s.J.empty())
            throw HypothesisViolated("trivial spec takes no J");
    }
    return s;
}

long TensorModuleSpec::n() const {
    if (rank() == 1) return 0;
    return (lambda.c1 - lambda.c2).to_long();
}

GL2Module TensorModuleSpec::fiber() const {
    if (rank() == 1) return GL2Module(lambda.c1, lambda.c1);
    return GL2Module(lambda.c1, lambda.c2);
}

bool TensorModuleSpec::has_plus() const {
    for (const auto& [dir, sign] : J) {
        (void)dir;
        if (sign == JSign::Plus) return true;
    }
    return false;
}

bool TensorModuleSpec::has_minus() const {
    for (const auto& [dir, sign] : J) {
        (void)dir;
        if (sign == JSign::Minus) return true;
    }
    return false;
}

long TensorModuleSpec::t(int dir) const {
    const Rational diff = (dir == 1) ? lambda.c1 - nu.c1 : lambda.c2 - nu.c2;
    if (!diff.is_integer())
        throw HypothesisViolated("direction " + std::to_string(dir) +
                                 " has non-integral lambda-nu offset " + diff.str());
    return diff.to_long();
}

Weight2 TensorModuleSpec::weight_at(long o1, long o2) const {
    return Weight2{nu.c1 + Rational(o1), nu.c2 + Rational(o2)};
}

std::string TensorModuleSpec::j_str() const {
    if (J.empty()) return "";
    if (rank() == 1) return J.at(1) == JSign::Plus ? "+" : "-";
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (const auto& [dir, sign] : J) {
        if (!first) out << ",";
        out << dir << (sign == JSign::Plus ? "+" : "-");
        first = false;
    }
    out << ")";
    return out.str();
}

std::string TensorModuleSpec::str() const {
    std::ostringstream out;
    out << "T[" << algebra_name(alg) << "](";
    if (rank() == 1)
        out << nu.c1.str() << "," << lambda.c1.str();
    else
        out << nu.str() << "," << lambda.str();
    const std::string js = j_str();
    if (!js.empty()) out << "," << js;
    if (c.has_value()) out << ",c=" << c->str();
    out << ")";
    if (trivial) out << "[trivial]";
    return out.str();
}

// ---------------------------------------------------------------------------
// ModuleVector

ModuleVector ModuleVector::basis(long o1, long o2, long i) {
    ModuleVector v;
    v.terms.emplace(MVKey{o1, o2, i}, Rational(1));
    return v;
}

ModuleVector& ModuleVector::add_term(const MVKey& k, const Rational& c) {
    if (c.is_zero()) return *this;
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
    return *this;
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
    ModuleVector r = *this;
    for (const auto& [k, c] : o.terms) r.add_term(k, c);
    return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
    ModuleVector r = *this;
    for (const auto& [k, c] : o.terms) r.add_term(k, -c);
    return r;
}

ModuleVector ModuleVector::scaled(const Rational& s) const {
    ModuleVector r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms) r.terms.emplace(k, c * s);
    return r;
}

std::string ModuleVector::str(const TensorModuleSpec& spec) const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        const Weight2 w = spec.weight_at(k.o1, k.o2);
        std::ostringstream mono;
        if (spec.rank() == 1)
            mono << "x^(" << w.c1.str() << ")";
        else
            mono << "x^(" << w.c1.str() << "," << w.c2.str() << ")";
        mono << " v" << k.i;
        std::string piece = (mag == Rational(1)) ? mono.str() : mag.str() + " " + mono.str();
        if (first) {
            out << (neg ? "-" : "") << piece;
            first = false;
        } else {
            out << (neg ? " - " : " + ") << piece;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Membership and carriers

std::string membership_name(Membership m) {
    switch (m) {
        case Membership::InSubmodule: return "in_submodule";
        case Membership::InQuotientBasis: return "in_quotient_basis";
        case Membership::Out: return "out";
    }
    return "?";
}

namespace {

// The Z_{>=0} condition in one direction for the basis vector at (offset, i).
bool direction_condition(const TensorModuleSpec& spec, int dir, long o1, long o2, long i) {
    if (spec.rank() == 1) return o1 >= spec.t(1);
    if (dir == 1) return o1 + i >= spec.t(1);
    return o2 - i >= spec.t(2);
}

}  // namespace

Membership membership_J(const TensorModuleSpec& spec, long o1, long o2, long i) {
    if (spec.J.empty()) throw NoJ("membership_J needs a spec with nonempty J");
    if (i < 0 || i > spec.n())
        throw IndexOutOfRange("fiber index " + std::to_string(i) + " outside 0.." +
                              std::to_string(spec.n()));
    bool some_minus_holds = false;
    for (const auto& [dir, sign] : spec.J) {
        const bool holds = direction_condition(spec, dir, o1, o2, i);
        if (sign == JSign::Plus) {
            if (!holds) return Membership::Out;
        } else if (holds) {
            some_minus_holds = true;
        }
    }
    if (!spec.has_minus()) return Membership::InSubmodule;
    return some_minus_holds ? Membership::InSubmodule : Membership::InQuotientBasis;
}

bool in_carrier(const TensorModuleSpec& spec, long o1, long o2, long i) {
    if (i < 0 || i > spec.n()) return false;
    if (spec.trivial) {
        return i == 0 && (spec.nu.c1 + Rational(o1)).is_zero() &&
               (spec.rank() == 1 || (spec.nu.c2 + Rational(o2)).is_zero());
    }
    if (spec.J.empty()) return true;
    const Membership m = membership_J(spec, o1, o2, i);
    if (spec.has_minus()) return m == Membership::InQuotientBasis;
    return m == Membership::InSubmodule;
}

std::vector<long> carrier_basis(const TensorModuleSpec& spec, long o1, long o2) {
    std::vector<long> out;
    for (long i = 0; i <= spec.n(); ++i)
        if (in_carrier(spec, o1, o2, i)) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------
// Action

namespace {

GL2Gen gen_for(int row, int col) {
    if (row == 1) return col == 1 ? GL2Gen::E11 : GL2Gen::E12;
    return col == 1 ? GL2Gen::E21 : GL2Gen::E22;
}

void reduce_quotient(ModuleVector& v, const TensorModuleSpec& spec) {
    if (!spec.has_minus()) return;
    for (auto it = v.terms.begin(); it != v.terms.end();) {
        if (membership_J(spec, it->first.o1, it->first.o2, it->first.i) ==
            Membership::InSubmodule)
            it = v.terms.erase(it);
        else
            ++it;
    }
}

}  // namespace

ModuleVector tensor_act(const LieElement& w, const ModuleVector& m,
                        const TensorModuleSpec& spec) {
    if (w.alg != spec.alg)
        throw AlgebraMismatch("acting with " + algebra_name(w.alg) + " element on " +
                              algebra_name(spec.alg) + " module");
    ModuleVector out;
    if (spec.trivial) {
        // The one-dimensional module: vector fields act by zero; the constant
        // scalar acts by c.
        for (const auto& [mono, cu] : w.terms) {
            if (mono.is_scalar() && mono.a[0] == 0 && mono.a[1] == 0) {
                for (const auto& [k, cm] : m.terms) out.add_term(k, cu * cm * *spec.c);
            }
        }
        return out;
    }
    const GL2Module fib = spec.fiber();
    const int rank = spec.rank();
    for (const auto& [mono, cu] : w.terms) {
        for (const auto& [k, cm] : m.terms) {
            const Rational coeff = cu * cm;
            const long no1 = k.o1 + mono.a[0];
            const long no2 = k.o2 + mono.a[1];
            if (mono.is_scalar()) {
                out.add_term(MVKey{no1, no2, k.i}, coeff * *spec.c);
                continue;
            }
            const int ax = mono.axis;
            const Rational s_ax = (ax == 1) ? spec.nu.c1 + Rational(k.o1)
                                            : spec.nu.c2 + Rational(k.o2);
            out.add_term(MVKey{no1, no2, k.i}, coeff * s_ax);
            for (int j = 1; j <= rank; ++j) {
                const long alpha_j = mono.a[j - 1];
                if (alpha_j == 0) continue;
                for (const auto& [idx, gc] : gl2_act(gen_for(j, ax), k.i, fib))
                    out.add_term(MVKey{no1, no2, idx}, coeff * Rational(alpha_j) * gc);
            }
        }
    }
    reduce_quotient(out, spec);
    return out;
}

Root2 homogeneous_root(const LieElement& u) {
    if (u.terms.empty()) throw HypothesisViolated("zero element has no root");
    Root2 r{u.terms.begin()->first.a[0], u.terms.begin()->first.a[1]};
    for (const auto& [m, c] : u.terms) {
        (void)c;
        if (m.a[0] != r.a1 || m.a[1] != r.a2)
            throw HypothesisViolated("element is not root-homogeneous");
    }
    return r;
}

RationalMatrix weight_matrix(const LieElement& u, const TensorModuleSpec& spec,
                             long o1, long o2) {
    const Root2 r = homogeneous_root(u);
    const std::vector<long> source = carrier_basis(spec, o1, o2);
    const std::vector<long> target = carrier_basis(spec, o1 + r.a1, o2 + r.a2);
    RationalMatrix mat(target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
        const ModuleVector img =
            tensor_act(u, ModuleVector::basis(o1, o2, source[col]), spec);
        for (const auto& [k, c] : img.terms) {
            const auto row_it = std::lower_bound(target.begin(), target.end(), k.i);
            if (k.o1 != o1 + r.a1 || k.o2 != o2 + r.a2 || row_it == target.end() ||
                *row_it != k.i)
                throw HypothesisViolated("action left the carrier at offset (" +
                                         std::to_string(o1) + "," + std::to_string(o2) +
                                         ")");
            mat.at(static_cast<std::size_t>(row_it - target.begin()), col) = c;
        }
    }
    return mat;
}

// ---------------------------------------------------------------------------
// Characters and supports

std::map<std::pair<long, long>, long> character_by_offset(const TensorModuleSpec& spec,
                                                          const WeightWindow& win) {
    std::map<std::pair<long, long>, long> out;
    for (const auto& [o1, o2] : win.offsets(spec.rank(), true)) {
        const long d = static_cast<long>(carrier_basis(spec, o1, o2).size());
        if (d > 0) out.emplace(std::make_pair(o1, o2), d);
    }
    return out;
}

std::map<Weight2, long> character(const TensorModuleSpec& spec, const WeightWindow& win) {
    std::map<Weight2, long> out;
    for (const auto& [off, d] : character_by_offset(spec, win))
        out.emplace(spec.weight_at(off.first, off.second), d);
    return out;
}

std::map<Weight2, long> char_series_expand(const std::string& formula_id,
                                           const Weight2& nu, const Weight2& lambda,
                                           const WeightWindow& win) {
    const Rational diff = lambda.c1 - lambda.c2;
    if (!diff.is_integer() || diff.sign() < 0)
        throw NotDominant("character formulas need lambda1 - lambda2 in Z_{>=0}");
    const long n = diff.to_long();

    enum class Kind { PP, PM, MP, MM, Half2M };
    Kind kind;
    if (formula_id == "(1+,2+)") kind = Kind::PP;
    else if (formula_id == "(1+,2-)") kind = Kind::PM;
    else if (formula_id == "(1-,2+)") kind = Kind::MP;
    else if (formula_id == "(1-,2-)") kind = Kind::MM;
    else if (formula_id == "2-") kind = Kind::Half2M;
    else throw UnknownFormula("unknown character formula id '" + formula_id + "'");

    const Rational t1r = lambda.c1 - nu.c1;
    const Rational t2r = lambda.c2 - nu.c2;
    if (kind != Kind::Half2M && !t1r.is_integer())
        throw HypothesisViolated("formula " + formula_id +
                                 " needs lambda1 - nu1 integral, got " + t1r.str());
    if (!t2r.is_integer())
        throw HypothesisViolated("formula " + formula_id +
                                 " needs lambda2 - nu2 integral, got " + t2r.str());
    const long t1 = t1r.is_integer() ? t1r.to_long() : 0;
    const long t2 = t2r.to_long();

    std::map<Weight2, long> out;
    for (const auto& [o1, o2] : win.offsets(2, true)) {
        const long k1 = o1 - t1;  // weight minus lambda, first coordinate
        const long k2 = o2 - t2;
        long lo = 0, hi = n;
        switch (kind) {
            case Kind::PP:
                lo = std::max(lo, -k1);
                hi = std::min(hi, k2);
                break;
            case Kind::PM:
                lo = std::max({lo, -k1, k2 + 1});
                break;
            case Kind::MP:
                hi = std::min({hi, -k1 - 1, k2});
                break;
            case Kind::MM:
                lo = std::max(lo, k2 + 1);
                hi = std::min(hi, -k1 - 1);
                break;
            case Kind::Half2M:
                lo = std::max(lo, k2 + 1);
                break;
        }
        const long mult = hi - lo + 1;
        if (mult > 0)
            out.emplace(Weight2{nu.c1 + Rational(o1), nu.c2 + Rational(o2)}, mult);
    }
    return out;
}

std::set<Weight2> support(const TensorModuleSpec& spec, const WeightWindow& win) {
    std::set<Weight2> out;
    for (const auto& [w, d] : character(spec, win)) {
        (void)d;
        out.insert(w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON wire format

namespace {

Rational rat_from_json(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ParseError("rational values must be strings like \"p/q\" or integers");
}

Weight2 weight_from_json(const json& v, int rank, const std::string& key) {
    if (!v.is_array() || v.size() != static_cast<std::size_t>(rank))
        throw ParseError("'" + key + "' must be an array of " + std::to_string(rank) +
                         " rationals");
    Weight2 w;
    w.c1 = rat_from_json(v.at(0));
    if (rank == 2) w.c2 = rat_from_json(v.at(1));
    return w;
}

}  // namespace

TensorModuleSpec spec_from_json_text(const std::string& text,
                                     std::optional<WeightWindow>* window_out) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("spec JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("spec JSON must be an object");

    const std::string alg_s = j.value("algebra", std::string("W2"));
    Algebra alg;
    if (alg_s == "W1") alg = Algebra::W1;
    else if (alg_s == "W2") alg = Algebra::W2;
    else if (alg_s == "A1") alg = Algebra::A1;
    else if (alg_s == "A2") alg = Algebra::A2;
    else throw ParseError("unknown algebra '" + alg_s + "'");
    const int rank = algebra_rank(alg);

    if (!j.contains("nu") || !j.contains("lambda"))
        throw ParseError("spec JSON needs 'nu' and 'lambda'");
    const Weight2 nu = weight_from_json(j.at("nu"), rank, "nu");
    const Weight2 lambda = weight_from_json(j.at("lambda"), rank, "lambda");

    std::map<int, JSign> J;
    if (j.contains("J")) {
        if (!j.at("J").is_array()) throw ParseError("'J' must be an array");
        for (const auto& e : j.at("J")) {
            if (!e.is_string()) throw ParseError("'J' entries must be strings");
            const std::string s = e.get<std::string>();
            int dir;
            JSign sign;
            if (s == "+" || s == "1+") { dir = 1; sign = JSign::Plus; }
            else if (s == "-" || s == "1-") { dir = 1; sign = JSign::Minus; }
            else if (s == "2+") { dir = 2; sign = JSign::Plus; }
            else if (s == "2-") { dir = 2; sign = JSign::Minus; }
            else throw ParseError("unknown J entry '" + s + "'");
            if (J.count(dir)) throw ParseError("duplicate J direction");
            J.emplace(dir, sign);
        }
    }

    std::optional<Rational> c;
    if (j.contains("c") && !j.at("c").is_null()) c = rat_from_json(j.at("c"));
    const bool trivial = j.value("trivial", false);

    if (window_out != nullptr) {
        *window_out = std::nullopt;
        if (j.contains("window")) {
            const auto& w = j.at("window");
            if (!w.is_object() || !w.contains("lo") || !w.contains("hi"))
                throw ParseError("'window' needs 'lo' and 'hi' arrays");
            WeightWindow win;
            const auto& lo = w.at("lo");
            const auto& hi = w.at("hi");
            if (!lo.is_array() || !hi.is_array() || lo.size() < 1 || hi.size() < 1)
                throw ParseError("'window' lo/hi must be arrays");
            win.lo1 = lo.at(0).get<long>();
            win.lo2 = lo.size() > 1 ? lo.at(1).get<long>() : 0;
            win.hi1 = hi.at(0).get<long>();
            win.hi2 = hi.size() > 1 ? hi.at(1).get<long>() : 0;
            win.margin = w.value("margin", 0L);
            *window_out = win;
        }
    }
    return TensorModuleSpec::make(alg, nu, lambda, std::move(J), std::move(c), trivial);
}

std::string spec_to_json_text(const TensorModuleSpec& spec) {
    json j;
    j["algebra"] = algebra_name(spec.alg);
    if (spec.rank() == 1) {
        j["nu"] = {spec.nu.c1.str()};
        j["lambda"] = {spec.lambda.c1.str()};
    } else {
        j["nu"] = {spec.nu.c1.str(), spec.nu.c2.str()};
        j["lambda"] = {spec.lambda.c1.str(), spec.lambda.c2.str()};
    }
    json jj = json::array();
    for (const auto& [dir, sign] : spec.J) {
        if (spec.rank() == 1)
            jj.push_back(sign == JSign::Plus ? "+" : "-");
        else
            jj.push_back(std::to_string(dir) + (sign == JSign::Plus ? "+" : "-"));
    }
    j["J"] = jj;
    if (spec.c.has_value()) j["c"] = spec.c->str();
    if (spec.trivial) j["trivial"] = true;
    return j.dump();
}

ModuleVector module_vector_parse(const std::string& text, const TensorModuleSpec& spec) {
    ModuleVector out;
    // Split into signed terms on '+'/'-' outside parentheses (minus signs
    // inside weight tuples like x^(3/2,-2/3) are part of the tuple).
    struct SignedPiece {
        int sign;
        std::string body;
    };
    std::vector<SignedPiece> pieces;
    std::string cur;
    int depth = 0;
    int sign = 1;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')' && depth > 0) --depth;
        if (depth == 0 && (ch == '+' || ch == '-')) {
            if (cur.find_first_not_of(" \t") == std::string::npos) {
                // Sign prefixed to the upcoming term.
                if (ch == '-') sign = -sign;
                cur.clear();
                continue;
            }
            pieces.push_back({sign, cur});
            cur.clear();
            sign = (ch == '-') ? -1 : 1;
            continue;
        }
        cur.push_back(ch);
    }
    pieces.push_back({sign, cur});
    for (auto& [piece_sign, piece] : pieces) {
        // Trim.
        const auto first = piece.find_first_not_of(" \t");
        if (first == std::string::npos)
            throw ParseError("empty term in module vector '" + text + "'");
        const auto last = piece.find_last_not_of(" \t");
        piece = piece.substr(first, last - first + 1);

        Rational coeff(piece_sign);
        std::string rest = piece;
        if (rest[0] != 'x') {
            const auto sp = rest.find(' ');
            if (sp == std::string::npos)
                throw ParseError("vector term '" + piece + "' needs an x^(...) factor");
            coeff = coeff * Rational::parse(rest.substr(0, sp));
            rest = rest.substr(sp + 1);
        }
        if (rest.rfind("x^(", 0) != 0)
            throw ParseError("vector term '" + piece + "' needs an x^(...) factor");
        const auto close = rest.find(')');
        if (close == std::string::npos) throw ParseError("unclosed x^( in '" + piece + "'");
        const std::string inside = rest.substr(3, close - 3);
        std::string tail = rest.substr(close + 1);

        Weight2 s;
        const auto comma = inside.find(',');
        if (spec.rank() == 1) {
            if (comma != std::string::npos)
                throw ParseError("rank-1 weight takes one coordinate");
            s.c1 = Rational::parse(inside);
        } else {
            if (comma == std::string::npos)
                throw ParseError("rank-2 weight needs two coordinates");
            s.c1 = Rational::parse(inside.substr(0, comma));
            s.c2 = Rational::parse(inside.substr(comma + 1));
        }

        long idx = 0;
        const auto vpos = tail.find('v');
        if (vpos != std::string::npos) {
            try {
                idx = std::stol(tail.substr(vpos + 1));
            } catch (const std::exception&) {
                throw ParseError("bad fiber index in '" + piece + "'");
            }
        }

        const Rational d1 = s.c1 - spec.nu.c1;
        const Rational d2 = s.c2 - spec.nu.c2;
        if (!d1.is_integer() || !d2.is_integer())
            throw ParseError("weight " + s.str() + " is not in the coset of nu = " +
                             spec.nu.str());
        out.add_term(MVKey{d1.to_long(), d2.to_long(), idx}, coeff);
    }
    return out;
}

}  // namespace weightlab
