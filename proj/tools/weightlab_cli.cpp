// weightlab — command-line driver for the weight-module laboratory.
//
// Subcommands cover single computations (act, character, support, wp,
// closure, parabolics, bounds, charpoly-check, loc-iso) and batch check
// suites (verify).  Output is JSON by default (--format table for a plain
// renderer), written to stdout or --out.  The process exits 0 exactly when
// every asserted check passes; informational findings never affect the exit
// code.  All output is deterministic for a fixed configuration and seed.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "weightlab/analysis.hpp"
#include "weightlab/errors.hpp"
#include "weightlab/lie.hpp"
#include "weightlab/localization.hpp"
#include "weightlab/matrix.hpp"
#include "weightlab/modules.hpp"
#include "weightlab/rational.hpp"
#include "weightlab/rng.hpp"

using nlohmann::ordered_json;
using namespace weightlab;

namespace {

// ---------------------------------------------------------------------------
// Shared options and output plumbing
// ---------------------------------------------------------------------------

struct CommonOpts {
    std::string spec_text;    // file path or inline JSON object
    std::string window_text;  // "lo1,lo2:hi1,hi2:margin"
    long samples = 20;
    std::string seed_text;    // empty: WEIGHTLAB_SEED env, then 0
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* sub, CommonOpts& o, bool with_spec) {
    if (with_spec)
        sub->add_option("--spec", o.spec_text,
                        "Module spec: path to a JSON file, or inline JSON");
    sub->add_option("--window", o.window_text,
                    "Weight window \"lo1,lo2:hi1,hi2:margin\" (overrides the "
                    "window embedded in the spec)");
    sub->add_option("--samples", o.samples, "Sample count for randomized checks");
    sub->add_option("--seed", o.seed_text,
                    "RNG seed (default: WEIGHTLAB_SEED env, then 0)");
    sub->add_option("--out", o.out, "Write the rendered output to this file");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
}

std::uint64_t resolve_seed(const CommonOpts& o) {
    if (!o.seed_text.empty()) return std::stoull(o.seed_text);
    if (const char* env = std::getenv("WEIGHTLAB_SEED"); env && *env)
        return std::stoull(env);
    return 0;
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Loads the spec (inline JSON if the argument starts with '{', else a file).
// Window priority: --window flag, then the window embedded in the spec JSON,
// then `fallback`.
TensorModuleSpec load_spec(const CommonOpts& o, WeightWindow& win,
                           const WeightWindow& fallback) {
    if (o.spec_text.empty())
        throw ParseError("--spec is required for this command");
    std::string text = o.spec_text;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{')
        text = slurp_file(o.spec_text);
    std::optional<WeightWindow> embedded;
    TensorModuleSpec spec = spec_from_json_text(text, &embedded);
    if (!o.window_text.empty())
        win = WeightWindow::parse(o.window_text);
    else if (embedded)
        win = *embedded;
    else
        win = fallback;
    return spec;
}

WeightWindow window_or(const CommonOpts& o, const WeightWindow& fallback) {
    if (!o.window_text.empty()) return WeightWindow::parse(o.window_text);
    return fallback;
}

// Writes the rendered document and returns the process exit code.
int emit(const CommonOpts& o, const ordered_json& doc,
         const std::string& table, int exit_code) {
    std::string payload =
        (o.format == "table") ? table : doc.dump(2) + "\n";
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw ParseError("cannot write file: " + o.out);
        f << payload;
    } else {
        std::cout << payload;
    }
    return exit_code;
}

// ---------------------------------------------------------------------------
// Small parsers
// ---------------------------------------------------------------------------

Rational rat(const std::string& s) { return Rational::parse(s); }

Weight2 parse_weight_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        return Weight2(rat(text), Rational(0));
    return Weight2(rat(text.substr(0, comma)), rat(text.substr(comma + 1)));
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// One basis monomial from text.  Rank 2 accepts the canonical form
// "x^(a,b) xKdK" (exponent prefix optional when zero), the shorthands
// "xAdB" and "dB", and the scalar forms "1" and "x^(a,b)".  Rank 1 accepts
// "D_i" and "I_j".
BasisMonomial parse_monomial(const std::string& raw, Algebra alg) {
    static const std::regex re_vf(
        R"(^(?:x\^\((-?\d+),(-?\d+)\)\s+)?x([12])d([12])$)");
    static const std::regex re_d(R"(^d([12])$)");
    static const std::regex re_scalar(R"(^x\^\((-?\d+),(-?\d+)\)$)");
    static const std::regex re_r1(R"(^([DI])_(-?\d+)$)");

    const std::string text = trim(raw);
    std::smatch m;
    if (algebra_rank(alg) == 1) {
        if (std::regex_match(text, m, re_r1)) {
            const long k = std::stol(m[2].str());
            return (m[1].str() == "D") ? BasisMonomial::D(alg, k)
                                       : BasisMonomial::I(k);
        }
        throw ParseError("cannot parse rank-1 monomial: \"" + text + "\"");
    }
    if (text == "1") return BasisMonomial::scalar_mono(alg, 0, 0);
    if (std::regex_match(text, m, re_scalar))
        return BasisMonomial::scalar_mono(alg, std::stol(m[1].str()),
                                          std::stol(m[2].str()));
    if (std::regex_match(text, m, re_vf)) {
        long r1 = m[1].matched ? std::stol(m[1].str()) : 0;
        long r2 = m[2].matched ? std::stol(m[2].str()) : 0;
        const int A = std::stoi(m[3].str());
        const int B = std::stoi(m[4].str());
        // x^(r) x_A d_B has root r + e_A - e_B and axis B.
        r1 += (A == 1) - (B == 1);
        r2 += (A == 2) - (B == 2);
        return BasisMonomial::vf(alg, r1, r2, B);
    }
    if (std::regex_match(text, m, re_d)) {
        const int B = std::stoi(m[1].str());
        return BasisMonomial::vf(alg, B == 1 ? -1 : 0, B == 2 ? -1 : 0, B);
    }
    throw ParseError("cannot parse monomial: \"" + text + "\"");
}

// A rational linear combination of monomials, with " + " / " - " separators
// and optional leading rational coefficients, e.g. "3/2 x1d2 - x^(0,1) x2d2".
LieElement parse_element(const std::string& raw, Algebra alg) {
    static const std::regex re_coeff(R"(^-?\d+(/\d+)?$)");
    std::string text = trim(raw);
    LieElement el = LieElement::zero(alg);
    if (text.empty() || text == "0") return el;

    int sign = 1;
    if (text[0] == '-') {
        sign = -1;
        text = trim(text.substr(1));
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t plus = text.find(" + ", pos);
        std::size_t minus = text.find(" - ", pos);
        std::size_t cut = std::min(plus, minus);
        std::string piece = trim(text.substr(pos, cut - pos));
        if (piece.empty()) throw ParseError("empty term in element text");
        Rational c(sign);
        std::string mono = piece;
        const auto sp = piece.find(' ');
        if (sp != std::string::npos &&
            std::regex_match(piece.substr(0, sp), re_coeff)) {
            c = rat(piece.substr(0, sp)) * Rational(sign);
            mono = trim(piece.substr(sp + 1));
        }
        el.add_term(parse_monomial(mono, alg), c);
        if (cut == std::string::npos) break;
        sign = (cut == plus) ? 1 : -1;
        pos = cut + 3;
    }
    return el;
}

// ---------------------------------------------------------------------------
// Table rendering helpers
// ---------------------------------------------------------------------------

std::string pad(const std::string& s, std::size_t w) {
    return s + std::string(s.size() < w ? w - s.size() : 0, ' ');
}

std::string render_reports_table(const std::vector<AnalysisReport>& reps) {
    std::size_t wc = 6, wp = 6, ws = 6;
    for (const auto& r : reps) {
        wc = std::max(wc, r.claim.size());
        wp = std::max(wp, r.params.size());
        ws = std::max(ws, r.status.size());
    }
    std::ostringstream out;
    out << pad("STATUS", ws) << "  " << pad("CLAIM", wc) << "  "
        << pad("PARAMS", wp) << "  DETAILS\n";
    for (const auto& r : reps)
        out << pad(r.status, ws) << "  " << pad(r.claim, wc) << "  "
            << pad(r.params, wp) << "  " << r.details << "\n";
    long fails = 0, passes = 0, infos = 0;
    for (const auto& r : reps) {
        if (r.status == "fail") ++fails;
        else if (r.status == "pass") ++passes;
        else ++infos;
    }
    out << passes << " passed, " << fails << " failed, " << infos
        << " informational\n";
    return out.str();
}

ordered_json reports_to_json(const std::vector<AnalysisReport>& reps) {
    return ordered_json::parse(analysis_report_json(reps));
}

void sort_reports(std::vector<AnalysisReport>& reps) {
    std::stable_sort(reps.begin(), reps.end(),
                     [](const AnalysisReport& a, const AnalysisReport& b) {
                         if (a.claim != b.claim) return a.claim < b.claim;
                         return a.params < b.params;
                     });
}

int reports_exit(const std::vector<AnalysisReport>& reps) {
    for (const auto& r : reps)
        if (r.status == "fail") return 1;
    return 0;
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------

TensorModuleSpec quad_spec(long l1, long l2, JSign s1, JSign s2) {
    const Weight2 lam{Rational(l1), Rational(l2)};
    return TensorModuleSpec::make(Algebra::W2, lam, lam, {{1, s1}, {2, s2}});
}

TensorModuleSpec rank1_spec(long l, JSign s) {
    const Weight2 lam{Rational(l), Rational(0)};
    return TensorModuleSpec::make(Algebra::W1, lam, lam, {{1, s}});
}

std::string profile_details(const std::map<Weight2, long>& prof) {
    long total = 0;
    for (const auto& [w, d] : prof) total += d;
    return "weights=" + std::to_string(prof.size()) +
           " total=" + std::to_string(total);
}

// Twisted kernel scans against the two strip predictions and the union bound.
std::vector<AnalysisReport> verify_wp() {
    std::vector<AnalysisReport> out;
    const WeightWindow win = WeightWindow::square(-8, 8, 6);
    const BasisMonomial a = BasisMonomial::vf(Algebra::W2, 1, -1, 2);
    const LieElement u =
        LieElement::monomial(BasisMonomial::vf(Algebra::W2, -1, 1, 1));

    struct HorCase { Rational nu1; long l1, l2, t2; };
    const std::vector<HorCase> hor = {
        {Rational(1, 3), 2, 0, 0},
        {Rational(2, 7), 3, 1, 1},
        {Rational(1, 5), 1, 0, -1},
    };
    for (const auto& hc : hor) {
        const Weight2 lam{Rational(hc.l1), Rational(hc.l2)};
        const Weight2 nu{hc.nu1, Rational(hc.l2 - hc.t2)};
        const auto spec = TensorModuleSpec::make(Algebra::W2, nu, lam,
                                                 {{2, JSign::Minus}});
        WPReport rep = primitive_weights(spec, TwistData{a, Rational(0)}, u, win);
        const auto strip = StripRegion::horizontal(
            hc.nu1, Rational(hc.l1 - 1), Rational(hc.l2 - 1));
        evaluate_against(rep, {strip}, spec, win);
        out.push_back({"twisted kernel scan matches the horizontal strip",
                       "nu=" + nu.str() + " lambda=" + lam.str(),
                       rep.equals_expected ? "pass" : "fail",
                       "weights=" + std::to_string(rep.weights.size()) +
                           " expected=" + strip.str()});
    }

    struct VerCase { long l1, l2, t1; Rational nu2; };
    const std::vector<VerCase> ver = {
        {2, 0, 0, Rational(1, 7)},
        {3, 1, 1, Rational(3, 5)},
        {1, 0, -1, Rational(2, 3)},
    };
    for (const auto& vc : ver) {
        const Weight2 lam{Rational(vc.l1), Rational(vc.l2)};
        const Weight2 nu{Rational(vc.l1 - vc.t1), vc.nu2};
        const auto spec = TensorModuleSpec::make(Algebra::W2, nu, lam,
                                                 {{1, JSign::Plus}});
        WPReport rep = primitive_weights(spec, TwistData{a, Rational(0)}, u, win);
        const auto strip = StripRegion::vertical(
            Rational(vc.l1), Rational(vc.l2), vc.nu2);
        evaluate_against(rep, {strip}, spec, win);
        out.push_back({"twisted kernel scan matches the vertical strip",
                       "nu=" + nu.str() + " lambda=" + lam.str(),
                       rep.equals_expected ? "pass" : "fail",
                       "weights=" + std::to_string(rep.weights.size()) +
                           " expected=" + strip.str()});
    }

    struct MixCase { long l1, l2, t1, t2; };
    const std::vector<MixCase> mix = {
        {2, 0, 0, 1},
        {3, 1, 1, 0},
        {2, 1, 0, 0},
    };
    for (const auto& mc : mix) {
        const Weight2 lam{Rational(mc.l1), Rational(mc.l2)};
        const Weight2 nu{Rational(mc.l1 - mc.t1), Rational(mc.l2 - mc.t2)};
        const auto spec = TensorModuleSpec::make(
            Algebra::W2, nu, lam, {{1, JSign::Plus}, {2, JSign::Minus}});
        WPReport rep = primitive_weights(spec, TwistData{a, Rational(0)}, u, win);
        const auto h = StripRegion::horizontal(
            nu.c1, Rational(mc.l1 - 1), Rational(mc.l2 - 1));
        const auto v = StripRegion::vertical(
            Rational(mc.l1), Rational(mc.l2), nu.c2);
        evaluate_against(rep, {h, v}, spec, win);
        out.push_back({"twisted kernel scan lies in the strip union",
                       "nu=" + nu.str() + " lambda=" + lam.str(),
                       rep.contained_in_expected ? "pass" : "fail",
                       "weights=" + std::to_string(rep.weights.size()) +
                           " equality_observed=" +
                           (rep.equals_expected ? "true" : "false")});
    }
    return out;
}

std::vector<AnalysisReport> verify_charpoly(long samples, std::uint64_t seed) {
    std::vector<AnalysisReport> out;
    for (long n = 0; n <= 6; ++n) {
        const auto smp = charpoly_default_samples(n, samples, seed);
        const auto chk = charpoly_identity_check(n, smp);
        const bool ok = chk.identity_ok && chk.failures.empty() &&
                        chk.samples_checked == static_cast<long>(smp.size());
        out.push_back({"spectral factorization of the composed fiber operator",
                       "n=" + std::to_string(n) +
                           " samples=" + std::to_string(chk.samples_checked),
                       ok ? "pass" : "fail",
                       ok ? "all eigenvalue products match"
                          : "failures=" + std::to_string(chk.failures.size())});
        std::string conv = "matrix=[";
        for (std::size_t i = 0; i < chk.matrix_conventions.size(); ++i)
            conv += (i ? "," : "") + chk.matrix_conventions[i];
        conv += "] charpoly=[";
        for (std::size_t i = 0; i < chk.charpoly_conventions.size(); ++i)
            conv += (i ? "," : "") + chk.charpoly_conventions[i];
        conv += "]";
        out.push_back({"bidiagonal reading conventions",
                       "n=" + std::to_string(n), "info", conv});
    }
    return out;
}

std::vector<AnalysisReport> verify_loc_iso() {
    std::vector<AnalysisReport> out;
    const WeightWindow win_r1 = WeightWindow::square(-12, 12, 3);
    const WeightWindow win_r2 = WeightWindow::square(-9, 9, 3);

    struct Case { std::string id; LocIsoParams p; const WeightWindow* win; };
    std::vector<Case> cases;
    {
        LocIsoParams p;
        p.lambda = Weight2(Rational(1, 3), Rational(0));
        p.c = Rational(2);
        p.nu = Rational(1, 2);
        cases.push_back({"A1_I1_plus", p, &win_r1});
        cases.push_back({"A1_Dm1_minus", p, &win_r1});
        LocIsoParams ps = p;
        ps.eta = Rational(-3, 7);
        cases.push_back({"A1_Dm1_shift", ps, &win_r1});
    }
    {
        LocIsoParams p;
        p.lambda = Weight2(Rational(2), Rational(0));
        p.s = Weight2(Rational(1, 3), Rational(1, 7));
        cases.push_back({"W2_reverse_2minus", p, &win_r2});
        cases.push_back({"W2_reverse_1plus", p, &win_r2});
        LocIsoParams pm = p;
        pm.s = Weight2(Rational(1, 3), Rational(-19, 3));
        cases.push_back({"W2_reverse_mixed", pm, &win_r2});
    }
    for (const auto& c : cases) {
        const auto rep = loc_iso_check(c.id, c.p, *c.win);
        out.push_back({"localization isomorphism intertwines the action",
                       c.id,
                       rep.ok() ? "pass" : "fail",
                       "generators=" + std::to_string(rep.generators_checked) +
                           " vectors=" + std::to_string(rep.vectors_checked) +
                           " violations=" +
                           std::to_string(rep.violations.size())});
    }
    return out;
}

std::vector<AnalysisReport> verify_closure() {
    std::vector<AnalysisReport> out;
    const WeightWindow win = WeightWindow::square(-5, 5, 2);
    const std::string claim_fill = "closure of a deep seed fills the character";
    const std::string claim_def = "closure of a boundary seed shows the deficiency";

    auto push = [&](const std::string& claim, const std::string& params,
                    bool ok, const std::map<Weight2, long>& prof) {
        out.push_back({claim, params, ok ? "pass" : "fail",
                       profile_details(prof)});
    };
    auto run_char = [&](const std::string& params, const TensorModuleSpec& spec,
                        long o1, long o2, long i) {
        const auto prof = closure_profile(spec, o1, o2, i, win);
        push(claim_fill, params, prof == character(spec, win), prof);
    };

    // Deep seeds reproduce the full character.
    run_char("quadrant lambda=(0,0) J=(1+,2+) seed=(2,2,0)",
             quad_spec(0, 0, JSign::Plus, JSign::Plus), 2, 2, 0);
    run_char("quadrant lambda=(1,0) J=(1+,2+) seed=(1,1,0)",
             quad_spec(1, 0, JSign::Plus, JSign::Plus), 1, 1, 0);
    run_char("quadrant lambda=(1,0) J=(1-,2-) seed=(-1,-2,0)",
             quad_spec(1, 0, JSign::Minus, JSign::Minus), -1, -2, 0);
    run_char("dense nu=(1/3,1/7) lambda=(2,0) seed=(0,0,1)",
             TensorModuleSpec::make(Algebra::W2,
                                    Weight2(Rational(1, 3), Rational(1, 7)),
                                    Weight2(Rational(2), Rational(0)), {}),
             0, 0, 1);
    run_char("half-plane nu=(1/3,0) lambda=(2,0) J=2- seed=(0,0,1)",
             TensorModuleSpec::make(Algebra::W2,
                                    Weight2(Rational(1, 3), Rational(0)),
                                    Weight2(Rational(2), Rational(0)),
                                    {{2, JSign::Minus}}),
             0, 0, 1);
    run_char("half-plane nu=(0,2/5) lambda=(3,1) J=1+ seed=(3,0,0)",
             TensorModuleSpec::make(Algebra::W2,
                                    Weight2(Rational(0), Rational(2, 5)),
                                    Weight2(Rational(3), Rational(1)),
                                    {{1, JSign::Plus}}),
             3, 0, 0);
    {
        const auto spec = rank1_spec(0, JSign::Plus);
        const auto prof = closure_profile(spec, 1, 0, 0, win);
        push(claim_fill, "rank-1 lambda=0 J=+ seed=1",
             prof == character(spec, win), prof);
    }
    {
        const auto spec = rank1_spec(2, JSign::Plus);
        const auto prof = closure_profile(spec, 2, 0, 0, win);
        push(claim_fill, "rank-1 lambda=2 J=+ seed=2",
             prof == character(spec, win), prof);
    }
    {
        const auto spec = rank1_spec(1, JSign::Minus);
        const auto prof = closure_profile(spec, -1, 0, 0, win);
        push(claim_fill, "rank-1 lambda=1 J=- seed=-1",
             prof == character(spec, win), prof);
    }

    // Boundary seeds reach strictly less.
    {
        const auto spec = quad_spec(0, 0, JSign::Plus, JSign::Plus);
        const auto prof = closure_profile(spec, 0, 0, 0, win);
        const std::map<Weight2, long> expect = {
            {Weight2(Rational(0), Rational(0)), 1}};
        push(claim_def, "quadrant lambda=(0,0) J=(1+,2+) seed=(0,0,0)",
             prof == expect, prof);
    }
    {
        // Weight (1+o1, o2); the corner seed reaches the punctured quadrant
        // with multiplicity one everywhere.
        const auto spec = quad_spec(1, 0, JSign::Plus, JSign::Plus);
        const auto prof = closure_profile(spec, -1, 1, 1, win);
        std::map<Weight2, long> expect;
        for (long w1 = 0; w1 <= 4; ++w1)
            for (long w2 = 0; w2 <= 3; ++w2)
                if (w1 != 0 || w2 != 0)
                    expect[Weight2(Rational(w1), Rational(w2))] = 1;
        push(claim_def, "quadrant lambda=(1,0) J=(1+,2+) seed=(-1,1,1)",
             prof == expect, prof);
    }
    {
        const auto spec = quad_spec(1, 0, JSign::Plus, JSign::Minus);
        const auto prof = closure_profile(spec, -1, -1, 1, win);
        std::map<Weight2, long> expect;
        for (long w1 = 0; w1 <= 4; ++w1)
            for (long w2 = -3; w2 <= -1; ++w2)
                expect[Weight2(Rational(w1), Rational(w2))] = 1;
        push(claim_def, "quadrant lambda=(1,0) J=(1+,2-) seed=(-1,-1,1)",
             prof == expect, prof);
    }
    {
        const auto spec = quad_spec(1, 0, JSign::Minus, JSign::Plus);
        const auto prof = closure_profile(spec, -2, 0, 0, win);
        std::map<Weight2, long> expect;
        for (long w1 = -2; w1 <= -1; ++w1)
            for (long w2 = 0; w2 <= 3; ++w2)
                expect[Weight2(Rational(w1), Rational(w2))] = 1;
        push(claim_def, "quadrant lambda=(1,0) J=(1-,2+) seed=(-2,0,0)",
             prof == expect, prof);
    }
    {
        const auto spec = quad_spec(1, 1, JSign::Minus, JSign::Minus);
        const auto prof = closure_profile(spec, -2, -1, 0, win);
        auto expect = character(spec, win);
        expect.erase(Weight2(Rational(0), Rational(0)));
        push(claim_def, "quadrant lambda=(1,1) J=(1-,2-) seed=(-2,-1,0)",
             prof == expect, prof);
    }
    {
        const auto spec = rank1_spec(0, JSign::Plus);
        const auto prof = closure_profile(spec, 0, 0, 0, win);
        const std::map<Weight2, long> expect = {
            {Weight2(Rational(0), Rational(0)), 1}};
        push(claim_def, "rank-1 lambda=0 J=+ seed=0", prof == expect, prof);
    }
    {
        const auto spec = rank1_spec(1, JSign::Minus);
        const auto prof = closure_profile(spec, -2, 0, 0, win);
        auto expect = character(spec, win);
        expect.erase(Weight2(Rational(0), Rational(0)));
        push(claim_def, "rank-1 lambda=1 J=- seed=-2", prof == expect, prof);
    }
    return out;
}

std::vector<AnalysisReport> verify_characters() {
    std::vector<AnalysisReport> out;
    const std::string claim = "module character matches the closed-form series";
    struct Quad { std::string id; std::map<int, JSign> J; };
    const std::vector<Quad> quads = {
        {"(1+,2+)", {{1, JSign::Plus}, {2, JSign::Plus}}},
        {"(1+,2-)", {{1, JSign::Plus}, {2, JSign::Minus}}},
        {"(1-,2+)", {{1, JSign::Minus}, {2, JSign::Plus}}},
        {"(1-,2-)", {{1, JSign::Minus}, {2, JSign::Minus}}},
    };
    const std::vector<std::pair<long, long>> lambdas = {
        {0, 0}, {1, 0}, {2, 0}, {3, 1}, {5, 2}};
    const WeightWindow win = WeightWindow::square(-12, 12, 2);
    for (const auto& qd : quads) {
        for (const auto& [l1, l2] : lambdas) {
            const Weight2 lam{Rational(l1), Rational(l2)};
            const auto spec =
                TensorModuleSpec::make(Algebra::W2, lam, lam, qd.J);
            const auto ch = character(spec, win);
            const auto ex = char_series_expand(qd.id, lam, lam, win);
            long maxmult = 0, total = 0;
            for (const auto& [w, m] : ch) {
                maxmult = std::max(maxmult, m);
                total += m;
            }
            out.push_back({claim,
                           "lambda=" + lam.str() + " J=" + qd.id,
                           ch == ex ? "pass" : "fail",
                           "weights=" + std::to_string(ch.size()) + " total=" +
                               std::to_string(total) + " maxmult=" +
                               std::to_string(maxmult)});
        }
    }
    {
        const Weight2 nu{Rational(1, 3), Rational(0)};
        const Weight2 lam{Rational(2), Rational(0)};
        const auto spec = TensorModuleSpec::make(Algebra::W2, nu, lam,
                                                 {{2, JSign::Minus}});
        const WeightWindow hwin = WeightWindow::square(-6, 6, 2);
        const auto ch = character(spec, hwin);
        const auto ex = char_series_expand("2-", nu, lam, hwin);
        out.push_back({claim, "nu=" + nu.str() + " lambda=" + lam.str() +
                                  " J=2-",
                       ch == ex ? "pass" : "fail",
                       "weights=" + std::to_string(ch.size())});
    }
    return out;
}

std::vector<AnalysisReport> verify_parabolics() {
    std::vector<AnalysisReport> out;
    const auto ps = enumerate_parabolics();
    const std::vector<std::string> expect_tags = {
        "P(1+)", "P(1-)", "P(2+)", "P(2-)", "P(12+)", "P(12-)",
        "P(1+,2-)", "P(1-,2+)", "P(2-,12-)", "P(1+,12+)", "P(1-,12-)",
        "P(2+,12+)"};
    bool tags_ok = ps.size() == expect_tags.size();
    for (std::size_t i = 0; tags_ok && i < ps.size(); ++i)
        tags_ok = ps[i].tag == expect_tags[i];
    out.push_back({"twelve named root subsets enumerate in standard order",
                   "radius=8", tags_ok ? "pass" : "fail",
                   "count=" + std::to_string(ps.size())});

    const auto p1 = parabolic_from_tag("1+");
    bool member_ok = true;
    for (const auto& r : w2_roots_within(8))
        member_ok = member_ok && (p1.contains(r) == (r.a1 <= 0));
    out.push_back({"membership in P(1+) is the first-coordinate sign law",
                   "radius=8", member_ok ? "pass" : "fail",
                   "roots=" + std::to_string(w2_roots_within(8).size())});

    auto root_set = [](const std::vector<Root2>& v) {
        return std::set<Root2>(v.begin(), v.end());
    };
    {
        std::set<Root2> levi, nil;
        for (long k = -1; k <= 8; ++k) levi.insert({0, k});
        for (long k = 0; k <= 8; ++k) nil.insert({-1, k});
        const bool ok = root_set(p1.levi_within(8)) == levi &&
                        root_set(p1.nilrad_within(8)) == nil;
        out.push_back({"Levi and nilradical parts split P(1+)", "radius=8",
                       ok ? "pass" : "fail",
                       "levi=" + std::to_string(levi.size()) +
                           " nilrad=" + std::to_string(nil.size())});
    }
    {
        const auto p2 = parabolic_from_tag("2+");
        std::set<Root2> levi, nil;
        for (long k = -1; k <= 8; ++k) levi.insert({k, 0});
        for (long k = 0; k <= 8; ++k) nil.insert({k, -1});
        const bool ok = root_set(p2.levi_within(8)) == levi &&
                        root_set(p2.nilrad_within(8)) == nil;
        out.push_back({"Levi and nilradical parts split P(2+)", "radius=8",
                       ok ? "pass" : "fail",
                       "levi=" + std::to_string(levi.size()) +
                           " nilrad=" + std::to_string(nil.size())});
    }
    {
        const auto p12 = parabolic_from_tag("12+");
        const std::set<Root2> levi = {{-1, 1}, {0, 0}, {1, -1}};
        const std::set<Root2> nil = {{-1, 0}, {0, -1}};
        const bool ok = root_set(p12.levi_within(8)) == levi &&
                        root_set(p12.nilrad_within(8)) == nil;
        out.push_back({"Levi and nilradical parts split P(12+)", "radius=8",
                       ok ? "pass" : "fail",
                       "levi=" + std::to_string(levi.size()) +
                           " nilrad=" + std::to_string(nil.size())});
    }
    return out;
}

std::vector<AnalysisReport> verify_bounds() {
    std::vector<AnalysisReport> out;
    struct HW { std::string tag; Rational l1, l2; bool expect; };
    const std::vector<HW> hw = {
        {"2+,12+", Rational(2), Rational(0), true},
        {"2+,12+", Rational(1, 3), Rational(0), false},
        {"1+,12+", Rational(0), Rational(2), true},
        {"1-,12-", Rational(3), Rational(1), true},
        {"2-,12-", Rational(1), Rational(3), true},
        {"1-,2+", Rational(1, 2), Rational(3, 2), true},
        {"1-,2+", Rational(0), Rational(2), false},
        {"1+,2-", Rational(3), Rational(1), false},
        {"1+,2-", Rational(1), Rational(1), true},
    };
    for (const auto& c : hw) {
        const Weight2 lam{c.l1, c.l2};
        const bool got = hw_bounded_check(lam, c.tag);
        out.push_back({"highest-weight boundedness over the Borel tag",
                       "tag=" + c.tag + " lambda=" + lam.str(),
                       got == c.expect ? "pass" : "fail",
                       std::string("bounded=") + (got ? "true" : "false")});
    }

    const std::vector<EpsVector> roots = {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}};
    struct S3 { Rational m0, m1, m2; bool expect; };
    const std::vector<S3> s3 = {
        {Rational(2), Rational(1), Rational(-3), true},
        {Rational(1, 3), Rational(1, 3), Rational(-2, 3), true},
        {Rational(1, 3), Rational(1, 7), Rational(-1, 2), false},
        {Rational(-2), Rational(0), Rational(2), false},
    };
    for (const auto& c : s3) {
        const bool got = sl3_bounded_weight_check(c.m0, c.m1, c.m2, roots);
        out.push_back({"rank-3 highest-weight boundedness",
                       "mu=(" + c.m0.str() + "," + c.m1.str() + "," +
                           c.m2.str() + ")",
                       got == c.expect ? "pass" : "fail",
                       std::string("bounded=") + (got ? "true" : "false")});
    }

    struct HP { Rational nu, l, c; std::string tag; bool expect; };
    const std::vector<HP> hp = {
        {Rational(1, 3), Rational(2), Rational(0), "1+", true},
        {Rational(1, 3), Rational(0), Rational(2), "1+", false},
        {Rational(1, 3), Rational(0), Rational(2), "1-", true},
        {Rational(1, 3), Rational(5, 2), Rational(3, 2), "2+", true},
        {Rational(1, 3), Rational(1, 2), Rational(3, 2), "2-", true},
        {Rational(1, 3), Rational(3), Rational(0), "2-", false},
    };
    for (const auto& c : hp) {
        const bool got = half_plane_bounded_check(c.nu, c.l, c.c, c.tag);
        out.push_back({"induced rank-1 family boundedness",
                       "tag=" + c.tag + " nu=" + c.nu.str() + " lambda=" +
                           c.l.str() + " c=" + c.c.str(),
                       got == c.expect ? "pass" : "fail",
                       std::string("bounded=") + (got ? "true" : "false")});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Subcommand handlers
// ---------------------------------------------------------------------------

const WeightWindow kDefaultWin = WeightWindow::square(-6, 6, 2);

int cmd_act(const CommonOpts& o, const std::string& element_text,
            const std::string& vector_text) {
    WeightWindow win = kDefaultWin;
    const auto spec = load_spec(o, win, kDefaultWin);
    const LieElement e = parse_element(element_text, spec.alg);
    const ModuleVector v = module_vector_parse(vector_text, spec);
    const ModuleVector r = tensor_act(e, v, spec);
    ordered_json doc;
    doc["command"] = "act";
    doc["spec"] = spec.str();
    doc["element"] = e.str();
    doc["input"] = v.str(spec);
    doc["result"] = r.str(spec);
    return emit(o, doc, r.str(spec) + "\n", 0);
}

int cmd_character(const CommonOpts& o) {
    WeightWindow win = kDefaultWin;
    const auto spec = load_spec(o, win, kDefaultWin);
    const auto ch = character(spec, win);
    const long degree = spec.n() + 1;
    long total = 0;
    for (const auto& [w, m] : ch) total += m;
    ordered_json doc;
    doc["command"] = "character";
    doc["spec"] = spec.str();
    doc["window"] = win.str();
    doc["degree"] = degree;
    doc["total"] = total;
    doc["entries"] = ordered_json::array();
    std::ostringstream tab;
    tab << "spec: " << spec.str() << "\nwindow: " << win.str()
        << "\ndegree: " << degree << "\n";
    for (const auto& [w, m] : ch) {
        doc["entries"].push_back({{"weight", w.str()}, {"mult", m}});
        tab << pad(w.str(), 16) << m << "\n";
    }
    tab << "total: " << total << "\n";
    return emit(o, doc, tab.str(), 0);
}

int cmd_support(const CommonOpts& o) {
    WeightWindow win = kDefaultWin;
    const auto spec = load_spec(o, win, kDefaultWin);
    const auto sh = support_shape(spec, win);
    ordered_json doc;
    doc["command"] = "support";
    doc["spec"] = spec.str();
    doc["window"] = win.str();
    doc["tag"] = sh.tag;
    doc["base"] = sh.base ? ordered_json(sh.base->str()) : ordered_json(nullptr);
    doc["twin_base"] =
        sh.twin_base ? ordered_json(sh.twin_base->str()) : ordered_json(nullptr);
    doc["shape"] = sh.str();
    return emit(o, doc, sh.str() + "\n", 0);
}

int cmd_wp(const CommonOpts& o, const std::string& twist_text,
           const std::string& exp_text, const std::string& op_text,
           bool plain) {
    WeightWindow win = kDefaultWin;
    const WeightWindow fallback = WeightWindow::square(-8, 8, 6);
    const auto spec = load_spec(o, win, fallback);
    const LieElement u = parse_element(op_text, spec.alg);
    ordered_json doc;
    doc["command"] = "wp";
    doc["spec"] = spec.str();
    doc["window"] = win.str();
    doc["op"] = u.str();

    WPReport rep;
    std::optional<BasisMonomial> twist_mono;
    Rational x(0);
    if (plain) {
        rep = primitive_weights(spec, u, win);
        doc["twist"] = nullptr;
    } else {
        twist_mono = parse_monomial(twist_text, spec.alg);
        x = rat(exp_text);
        rep = primitive_weights(spec, TwistData{*twist_mono, x}, u, win);
        doc["twist"] = {{"monomial", twist_mono->str()},
                        {"exponent", x.str()}};
    }
    doc["shift"] = rep.shift.str();

    // Strip predictions apply to the lemma configuration: twist along the
    // raising mixed monomial, kernel of the lowering one, rank-2 spec with
    // the matching half-plane data.
    std::string asserted = "none";
    std::vector<StripRegion> regions;
    const bool lemma_ops =
        !plain && twist_mono &&
        *twist_mono == BasisMonomial::vf(Algebra::W2, 1, -1, 2) &&
        u == LieElement::monomial(BasisMonomial::vf(Algebra::W2, -1, 1, 1));
    if (lemma_ops && spec.rank() == 2 && !spec.trivial) {
        const Weight2 lam = spec.lambda;
        const Weight2 nu = spec.nu;
        const std::map<int, JSign> J = spec.J;
        if (J == std::map<int, JSign>{{2, JSign::Minus}}) {
            regions.push_back(StripRegion::horizontal(
                nu.c1 + x, lam.c1 - Rational(1) - x, lam.c2 - Rational(1) - x));
            asserted = "equality";
        } else if (J == std::map<int, JSign>{{1, JSign::Plus}}) {
            regions.push_back(StripRegion::vertical(
                lam.c1 + x, lam.c2 + x, nu.c2 - x));
            asserted = "equality";
        } else if (J == std::map<int, JSign>{{1, JSign::Plus},
                                             {2, JSign::Minus}}) {
            regions.push_back(StripRegion::horizontal(
                nu.c1 + x, lam.c1 - Rational(1) - x, lam.c2 - Rational(1) - x));
            regions.push_back(StripRegion::vertical(
                lam.c1 + x, lam.c2 + x, nu.c2 - x));
            asserted = "containment";
        }
    }
    if (!regions.empty()) evaluate_against(rep, regions, spec, win);

    doc["weights"] = ordered_json::array();
    for (const auto& w : rep.weights) doc["weights"].push_back(w.str());
    doc["expected"] = ordered_json::array();
    for (const auto& s : regions) doc["expected"].push_back(s.str());
    doc["asserted"] = asserted;
    std::string status = "info";
    if (asserted == "equality")
        status = rep.equals_expected ? "pass" : "fail";
    else if (asserted == "containment")
        status = rep.contained_in_expected ? "pass" : "fail";
    doc["equals_expected"] = rep.equals_expected;
    doc["contained_in_expected"] = rep.contained_in_expected;
    doc["status"] = status;

    std::ostringstream tab;
    tab << "spec: " << spec.str() << "\nwindow: " << win.str() << "\n"
        << rep.str() << "\nstatus: " << status << "\n";
    return emit(o, doc, tab.str(), status == "fail" ? 1 : 0);
}

int cmd_charpoly_check(const CommonOpts& o, long nmax) {
    const std::uint64_t seed = resolve_seed(o);
    ordered_json doc;
    doc["command"] = "charpoly-check";
    doc["seed"] = seed;
    doc["samples"] = o.samples;
    doc["checks"] = ordered_json::array();
    bool all_ok = true;
    std::ostringstream tab;
    for (long n = 0; n <= nmax; ++n) {
        const auto smp = charpoly_default_samples(n, o.samples, seed);
        const auto chk = charpoly_identity_check(n, smp);
        all_ok = all_ok && chk.identity_ok && chk.failures.empty();
        ordered_json j;
        j["n"] = chk.n;
        j["samples_checked"] = chk.samples_checked;
        j["identity_ok"] = chk.identity_ok;
        j["matrix_conventions"] = chk.matrix_conventions;
        j["charpoly_conventions"] = chk.charpoly_conventions;
        j["failures"] = chk.failures;
        doc["checks"].push_back(j);
        tab << "n=" << n << " samples=" << chk.samples_checked
            << " identity=" << (chk.identity_ok ? "ok" : "FAIL") << "\n";
    }
    doc["status"] = all_ok ? "pass" : "fail";
    tab << "status: " << (all_ok ? "pass" : "fail") << "\n";
    return emit(o, doc, tab.str(), all_ok ? 0 : 1);
}

int cmd_loc_iso(const CommonOpts& o, const std::string& only_id,
                const std::string& lambda_text, const std::string& c_text,
                const std::string& nu_text, const std::string& eta_text,
                const std::string& s_text) {
    ordered_json doc;
    doc["command"] = "loc-iso";
    doc["checks"] = ordered_json::array();
    bool all_ok = true;
    std::ostringstream tab;

    const bool custom = !lambda_text.empty() || !c_text.empty() ||
                        !nu_text.empty() || !eta_text.empty() ||
                        !s_text.empty();
    std::vector<std::string> ids;
    if (!only_id.empty())
        ids.push_back(only_id);
    else
        ids = loc_iso_ids();
    if (custom && only_id.empty())
        throw ParseError("parameter overrides require --id");

    for (const auto& id : ids) {
        LocIsoParams p;
        WeightWindow win = WeightWindow::square(-12, 12, 3);
        const bool rank2 = id.rfind("W2", 0) == 0;
        if (rank2) {
            p.lambda = Weight2(Rational(2), Rational(0));
            p.s = (id == "W2_reverse_mixed")
                      ? Weight2(Rational(1, 3), Rational(-19, 3))
                      : Weight2(Rational(1, 3), Rational(1, 7));
            win = WeightWindow::square(-9, 9, 3);
        } else {
            p.lambda = Weight2(Rational(1, 3), Rational(0));
            p.c = Rational(2);
            p.nu = Rational(1, 2);
            if (id == "A1_Dm1_shift") p.eta = Rational(-3, 7);
        }
        if (custom) {
            if (!lambda_text.empty()) p.lambda = parse_weight_pair(lambda_text);
            if (!c_text.empty()) p.c = rat(c_text);
            if (!nu_text.empty()) p.nu = rat(nu_text);
            if (!eta_text.empty()) p.eta = rat(eta_text);
            if (!s_text.empty()) p.s = parse_weight_pair(s_text);
        }
        if (!o.window_text.empty()) win = WeightWindow::parse(o.window_text);
        const auto rep = loc_iso_check(id, p, win);
        all_ok = all_ok && rep.ok();
        doc["checks"].push_back(ordered_json::parse(loc_iso_report_json(rep)));
        tab << pad(id, 20) << (rep.ok() ? "pass" : "FAIL")
            << "  generators=" << rep.generators_checked
            << " vectors=" << rep.vectors_checked
            << " violations=" << rep.violations.size() << "\n";
    }
    doc["status"] = all_ok ? "pass" : "fail";
    tab << "status: " << (all_ok ? "pass" : "fail") << "\n";
    return emit(o, doc, tab.str(), all_ok ? 0 : 1);
}

int cmd_closure(const CommonOpts& o, long o1, long o2, long idx) {
    WeightWindow win = kDefaultWin;
    const WeightWindow fallback = WeightWindow::square(-5, 5, 2);
    const auto spec = load_spec(o, win, fallback);
    const auto prof = closure_profile(spec, o1, o2, idx, win);
    const auto ch = character(spec, win);
    long total = 0;
    for (const auto& [w, d] : prof) total += d;
    ordered_json doc;
    doc["command"] = "closure";
    doc["spec"] = spec.str();
    doc["window"] = win.str();
    doc["seed"] = {o1, o2, idx};
    doc["profile"] = ordered_json::array();
    std::ostringstream tab;
    tab << "spec: " << spec.str() << "\nwindow: " << win.str() << "\nseed: ("
        << o1 << "," << o2 << "," << idx << ")\n";
    for (const auto& [w, d] : prof) {
        doc["profile"].push_back({{"weight", w.str()}, {"dim", d}});
        tab << pad(w.str(), 16) << d << "\n";
    }
    doc["total"] = total;
    doc["matches_character"] = (prof == ch);
    tab << "total: " << total << "\nmatches_character: "
        << (prof == ch ? "true" : "false") << "\n";
    return emit(o, doc, tab.str(), 0);
}

int cmd_parabolics(const CommonOpts& o, long radius) {
    const auto ps = enumerate_parabolics();
    ordered_json doc;
    doc["command"] = "parabolics";
    doc["radius"] = radius;
    doc["sets"] = ordered_json::array();
    std::ostringstream tab;
    for (const auto& p : ps) {
        ordered_json j;
        j["tag"] = p.tag;
        j["roots"] = ordered_json::array();
        j["levi"] = ordered_json::array();
        j["nilrad"] = ordered_json::array();
        for (const auto& r : p.roots_within(radius))
            j["roots"].push_back(r.str());
        for (const auto& r : p.levi_within(radius))
            j["levi"].push_back(r.str());
        for (const auto& r : p.nilrad_within(radius))
            j["nilrad"].push_back(r.str());
        doc["sets"].push_back(j);
        tab << pad(p.tag, 12) << "roots=" << p.roots_within(radius).size()
            << " levi=" << p.levi_within(radius).size()
            << " nilrad=" << p.nilrad_within(radius).size() << "\n";
    }
    return emit(o, doc, tab.str(), 0);
}

int cmd_bounds_hw(const CommonOpts& o, const std::string& lambda_text,
                  const std::string& tag) {
    const Weight2 lam = parse_weight_pair(lambda_text);
    const bool b = hw_bounded_check(lam, tag);
    ordered_json doc;
    doc["command"] = "bounds";
    doc["kind"] = "hw";
    doc["lambda"] = lam.str();
    doc["tag"] = tag;
    doc["bounded"] = b;
    return emit(o, doc,
                std::string("bounded: ") + (b ? "true" : "false") + "\n", 0);
}

int cmd_bounds_sl3(const CommonOpts& o, const std::string& mu_text) {
    std::vector<std::string> parts;
    std::stringstream ss(mu_text);
    std::string piece;
    while (std::getline(ss, piece, ',')) parts.push_back(trim(piece));
    if (parts.size() != 3)
        throw ParseError("--sl3 weight must be \"m0,m1,m2\"");
    const std::vector<EpsVector> roots = {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}};
    const bool b = sl3_bounded_weight_check(rat(parts[0]), rat(parts[1]),
                                            rat(parts[2]), roots);
    ordered_json doc;
    doc["command"] = "bounds";
    doc["kind"] = "sl3";
    doc["mu"] = "(" + parts[0] + "," + parts[1] + "," + parts[2] + ")";
    doc["bounded"] = b;
    return emit(o, doc,
                std::string("bounded: ") + (b ? "true" : "false") + "\n", 0);
}

int cmd_bounds_half_plane(const CommonOpts& o, const std::string& nu_text,
                          const std::string& lambda_text,
                          const std::string& c_text, const std::string& tag) {
    const bool b =
        half_plane_bounded_check(rat(nu_text), rat(lambda_text), rat(c_text), tag);
    ordered_json doc;
    doc["command"] = "bounds";
    doc["kind"] = "half-plane";
    doc["nu"] = nu_text;
    doc["lambda"] = lambda_text;
    doc["c"] = c_text;
    doc["tag"] = tag;
    doc["bounded"] = b;
    return emit(o, doc,
                std::string("bounded: ") + (b ? "true" : "false") + "\n", 0);
}

int cmd_verify(const CommonOpts& o, const std::string& suite) {
    std::vector<AnalysisReport> reps;
    auto want = [&](const char* name) {
        return suite == "all" || suite == name;
    };
    if (want("wp")) {
        auto r = verify_wp();
        reps.insert(reps.end(), r.begin(), r.end());
    }
    if (want("charpoly")) {
        auto r = verify_charpoly(o.samples, resolve_seed(o));
        reps.insert(reps.end(), r.begin(), r.end());
    }
    if (want("loc-iso")) {
        auto r = verify_loc_iso();
        reps.insert(reps.end(), r.begin(), r.end());
    }
    if (want("closure")) {
        auto r = verify_closure();
        reps.insert(reps.end(), r.begin(), r.end());
    }
    if (want("characters")) {
        auto r = verify_characters();
        reps.insert(reps.end(), r.begin(), r.end());
    }
    if (want("parabolics")) {
        auto r = verify_parabolics();
        reps.insert(reps.end(), r.begin(), r.end());
    }
    if (want("bounds")) {
        auto r = verify_bounds();
        reps.insert(reps.end(), r.begin(), r.end());
    }
    sort_reports(reps);
    return emit(o, reports_to_json(reps), render_reports_table(reps),
                reports_exit(reps));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weightlab: exact computations in bounded weight modules "
                 "over rank-1 and rank-2 Cartan-type algebras"};
    app.require_subcommand(1);

    CommonOpts o;

    std::string element_text, vector_text;
    auto* act = app.add_subcommand(
        "act", "Apply a Lie algebra element to a module vector");
    add_common(act, o, true);
    act->add_option("element", element_text, "Element text, e.g. \"x1d1\"")
        ->required();
    act->add_option("vector", vector_text,
                    "Module vector text, e.g. \"x^(1/2,1/3) v0\"")
        ->required();

    auto* character_cmd = app.add_subcommand(
        "character", "Weight multiplicities over the window interior");
    add_common(character_cmd, o, true);

    auto* support_cmd = app.add_subcommand(
        "support", "Classify the support shape over the window interior");
    add_common(support_cmd, o, true);

    std::string twist_text = "x1d2", exp_text = "0", op_text = "x2d1";
    bool wp_plain = false;
    auto* wp_cmd = app.add_subcommand(
        "wp", "Scan for weights carrying vectors killed by an operator, on "
              "the module twisted along a localizing monomial");
    add_common(wp_cmd, o, true);
    wp_cmd->add_option("--twist", twist_text, "Localizing monomial");
    wp_cmd->add_option("--exp", exp_text, "Twist exponent (rational)");
    wp_cmd->add_option("--op", op_text, "Operator whose kernel is scanned");
    wp_cmd->add_flag("--plain", wp_plain, "Scan the untwisted module instead");

    long nmax = 6;
    auto* cp_cmd = app.add_subcommand(
        "charpoly-check",
        "Verify the spectral factorization of the composed fiber operator");
    add_common(cp_cmd, o, false);
    cp_cmd->add_option("--nmax", nmax, "Largest fiber index checked");

    std::string iso_id, iso_lambda, iso_c, iso_nu, iso_eta, iso_s;
    auto* iso_cmd = app.add_subcommand(
        "loc-iso", "Check localization isomorphisms generator by generator");
    add_common(iso_cmd, o, false);
    iso_cmd->add_option("--id", iso_id, "Check a single isomorphism id");
    iso_cmd->add_option("--lambda", iso_lambda, "Override lambda \"a,b\"");
    iso_cmd->add_option("--c", iso_c, "Override the scalar charge");
    iso_cmd->add_option("--nu", iso_nu, "Override the exponent nu");
    iso_cmd->add_option("--eta", iso_eta, "Override the exponent eta");
    iso_cmd->add_option("--s", iso_s, "Override the base weight \"a,b\"");

    long cl_o1 = 0, cl_o2 = 0, cl_i = 0;
    auto* closure_cmd = app.add_subcommand(
        "closure", "Weight profile of the submodule closure of one basis "
                   "vector");
    add_common(closure_cmd, o, true);
    closure_cmd->add_option("o1", cl_o1, "First offset of the seed")
        ->required();
    closure_cmd->add_option("o2", cl_o2, "Second offset (0 for rank 1)");
    closure_cmd->add_option("i", cl_i, "Fiber index of the seed");

    long radius = 3;
    auto* para_cmd = app.add_subcommand(
        "parabolics", "List the twelve named root subsets with their Levi "
                      "and nilradical parts");
    add_common(para_cmd, o, false);
    para_cmd->add_option("--radius", radius, "Max-norm radius of the listing");

    auto* bounds_cmd =
        app.add_subcommand("bounds", "Evaluate boundedness predicates");
    bounds_cmd->require_subcommand(1);
    std::string hw_lambda, hw_tag;
    auto* hw_cmd = bounds_cmd->add_subcommand(
        "hw", "Highest-weight boundedness over a Borel tag");
    add_common(hw_cmd, o, false);
    hw_cmd->add_option("lambda", hw_lambda, "Weight \"a,b\"")->required();
    hw_cmd->add_option("tag", hw_tag, "Borel tag, e.g. \"2+,12+\"")
        ->required();
    std::string sl3_mu;
    auto* sl3_cmd = bounds_cmd->add_subcommand(
        "sl3", "Rank-3 highest-weight boundedness");
    add_common(sl3_cmd, o, false);
    sl3_cmd->add_option("mu", sl3_mu, "Weight \"m0,m1,m2\"")->required();
    std::string hp_nu, hp_lambda, hp_c, hp_tag;
    auto* hp_cmd = bounds_cmd->add_subcommand(
        "half-plane", "Boundedness of the induced rank-1 family");
    add_common(hp_cmd, o, false);
    hp_cmd->add_option("nu", hp_nu, "Exponent nu")->required();
    hp_cmd->add_option("lambda", hp_lambda, "Weight lambda")->required();
    hp_cmd->add_option("c", hp_c, "Scalar charge c")->required();
    hp_cmd->add_option("tag", hp_tag, "Half-plane tag, e.g. \"1+\"")
        ->required();

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand(
        "verify", "Run a named check suite and report pass/fail per claim");
    add_common(verify_cmd, o, false);
    verify_cmd
        ->add_option("suite", suite,
                     "all|wp|charpoly|loc-iso|closure|characters|parabolics|"
                     "bounds")
        ->check(CLI::IsMember({"all", "wp", "charpoly", "loc-iso", "closure",
                               "characters", "parabolics", "bounds"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*act) return cmd_act(o, element_text, vector_text);
        if (*character_cmd) return cmd_character(o);
        if (*support_cmd) return cmd_support(o);
        if (*wp_cmd) return cmd_wp(o, twist_text, exp_text, op_text, wp_plain);
        if (*cp_cmd) return cmd_charpoly_check(o, nmax);
        if (*iso_cmd)
            return cmd_loc_iso(o, iso_id, iso_lambda, iso_c, iso_nu, iso_eta,
                               iso_s);
        if (*closure_cmd) return cmd_closure(o, cl_o1, cl_o2, cl_i);
        if (*para_cmd) return cmd_parabolics(o, radius);
        if (*bounds_cmd) {
            if (*hw_cmd) return cmd_bounds_hw(o, hw_lambda, hw_tag);
            if (*sl3_cmd) return cmd_bounds_sl3(o, sl3_mu);
            if (*hp_cmd)
                return cmd_bounds_half_plane(o, hp_nu, hp_lambda, hp_c, hp_tag);
        }
        if (*verify_cmd) return cmd_verify(o, suite);
    } catch (const std::exception& e) {
        ordered_json err;
        err["error"] = e.what();
        if (o.format == "table")
            std::cerr << "error: " << e.what() << "\n";
        else
            std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 1;
}
