#pragma once

// Orchestration behind the command-line front end: input parsing, the full
// weight -> spectrum -> delta -> Ehrhart pipeline, and the verify driver.

#include "ehrspec/ehrhart.hpp"
#include "ehrspec/generators.hpp"
#include "ehrspec/geometry.hpp"
#include "ehrspec/oracle.hpp"
#include "ehrspec/spectrum.hpp"

#include <json.hpp>

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace ehrspec {

using Json = nlohmann::ordered_json;

enum class Command { weight, spectrum, delta, ehrhart, weighted, reflexive, toric, verify, bench };
enum class OutputFormat { text, json };

struct PolytopeInput {
    std::vector<Point> vertices;
    std::optional<std::vector<RatVector>> facets;
    // Optional delta-vector to test against lattice point counts in verify.
    std::optional<std::vector<BigInt>> claimed_delta;
};

struct ToricFamily {
    enum class Kind { box, reeve };
    Kind kind = Kind::box;
    std::vector<std::int64_t> exponents; // box
    std::int64_t h = 0;                  // reeve
};

struct JobSpec {
    Command command = Command::spectrum;
    std::variant<PolytopeInput, ToricFamily> input;
    OutputFormat format = OutputFormat::text;
    EnumerationOptions enumeration;
};

// ---------------------------------------------------------------------------
// JSON helpers

inline Json big_to_json(const BigInt &v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Json to_json(const std::vector<BigInt> &v) {
    Json a = Json::array();
    for (const auto &x : v) a.push_back(big_to_json(x));
    return a;
}

inline Json to_json(const RatVector &v) {
    Json a = Json::array();
    for (const auto &x : v) a.push_back(x.to_string());
    return a;
}

inline Rat rat_from_json(const Json &j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw InvalidInput("expected a rational as integer or \"p/q\" string, got " + j.dump());
}

inline BigInt int_from_json(const Json &j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        Rat r = Rat::parse(j.get<std::string>());
        if (r.is_integer()) return r.num();
    }
    throw InvalidInput("expected an integer, got " + j.dump());
}

inline PolytopeInput parse_polytope_input(const Json &j) {
    if (!j.is_object()) throw InvalidInput("input must be a JSON object");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw InvalidInput("input needs a \"vertices\" array");
    PolytopeInput in;
    for (const auto &row : j["vertices"]) {
        if (!row.is_array()) throw InvalidInput("each vertex must be an array of integers");
        Point p;
        for (const auto &c : row) {
            if (!c.is_number_integer()) throw InvalidInput("vertex coordinates must be integers, got " + c.dump());
            p.push_back(c.get<std::int64_t>());
        }
        in.vertices.push_back(std::move(p));
    }
    if (j.contains("facets")) {
        if (!j["facets"].is_array()) throw InvalidInput("\"facets\" must be an array");
        std::vector<RatVector> facets;
        for (const auto &row : j["facets"]) {
            if (!row.is_array()) throw InvalidInput("each facet normal must be an array");
            RatVector u;
            for (const auto &c : row) u.push_back(rat_from_json(c));
            facets.push_back(std::move(u));
        }
        in.facets = std::move(facets);
    }
    if (j.contains("claimed_delta")) {
        std::vector<BigInt> d;
        for (const auto &c : j["claimed_delta"]) d.push_back(int_from_json(c));
        in.claimed_delta = std::move(d);
    }
    return in;
}

inline PolytopeInput parse_polytope_text(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return parse_polytope_input(j);
}

// ---------------------------------------------------------------------------
// Pipeline

struct ResolvedPolytope {
    std::string mode; // "simplex" or "hpolytope"
    std::optional<Simplex> simplex;
    HPolytope h;
};

inline ResolvedPolytope resolve(const PolytopeInput &in) {
    if (!in.facets) {
        Simplex s(in.vertices);
        HPolytope h = facet_normals(s);
        return ResolvedPolytope{"simplex", std::move(s), std::move(h)};
    }
    HPolytope h(*in.facets, in.vertices);
    std::optional<Simplex> s;
    if (in.vertices.size() == h.dim() + 1) s.emplace(in.vertices);
    return ResolvedPolytope{"hpolytope", std::move(s), std::move(h)};
}

struct WeightedClass {
    Rat alpha;
    FracPoly delta;
    RatPoly ehrhart;
};

struct PipelineReport {
    std::string mode;
    std::int64_t dim = 0;
    std::vector<Point> vertices;
    std::string family; // toric inputs only

    std::optional<WeightVector> weight;
    std::optional<bool> reduced;
    BigInt mu;
    std::vector<Rat> barycentric;
    std::vector<RatVector> facet_normals;

    std::string spectrum_path;
    FracPoly spectrum;
    SpectrumReport stats;
    std::vector<BigInt> delta;
    RatPoly ehrhart;
    std::vector<WeightedClass> weighted;

    std::optional<bool> reflexive_geometric;
    bool spectrum_integral = false;
    bool spectrum_equals_delta = false;

    std::vector<std::string> warnings;
};

inline FracPoly delta_as_fracpoly(const std::vector<BigInt> &delta) {
    FracPoly f;
    for (std::size_t k = 0; k < delta.size(); ++k) f.add_term(Rat(static_cast<std::int64_t>(k)), delta[k]);
    return f;
}

namespace detail {

// Everything downstream of the spectrum is shared by polytope and toric inputs.
inline void finish_from_spectrum(PipelineReport &r) {
    r.stats = spectrum_stats(r.spectrum, r.dim);
    r.delta = spectrum_to_delta(r.spectrum, r.dim);
    r.ehrhart = delta_to_ehrhart(r.delta, r.dim);
    for (const auto &[alpha, d] : weighted_delta_decomposition(r.spectrum, r.dim))
        r.weighted.push_back({alpha, d, weighted_ehrhart(d, r.dim)});
    r.spectrum_integral = spectrum_is_integral(r.spectrum);
    r.spectrum_equals_delta = r.spectrum == delta_as_fracpoly(r.delta);
}

} // namespace detail

inline PipelineReport run_pipeline(const ResolvedPolytope &p, const EnumerationOptions &opt = {}) {
    PipelineReport r;
    r.mode = p.mode;
    r.dim = static_cast<std::int64_t>(p.h.dim());
    r.vertices = p.h.vertices();
    r.facet_normals = polar_vertices(p.h);
    r.reflexive_geometric = is_reflexive_geometric(p.h);

    if (p.simplex) {
        r.weight = p.simplex->weight();
        r.reduced = is_reduced(*r.weight);
        r.mu = milnor_number(*r.weight);
        r.barycentric = origin_barycentric(p.simplex->vertices());
    }
    if (r.reduced.value_or(false)) {
        r.spectrum_path = "closed-form";
        r.spectrum = spectrum_reduced_simplex(*r.weight);
    } else {
        if (r.reduced) {
            BigInt g = 0;
            for (const auto &q : r.weight->q) g = boost::multiprecision::gcd(g, q);
            r.warnings.push_back("simplex is not reduced (gcd of weights = " + g.str() +
                                 "); the closed spectrum formula does not hold for non-reduced simplices, "
                                 "falling back to lattice point enumeration");
        }
        r.spectrum_path = "enumeration";
        r.spectrum = spectrum_by_enumeration(p.h, opt);
        if (!r.weight) r.mu = total(r.spectrum);
    }
    detail::finish_from_spectrum(r);
    return r;
}

inline PipelineReport run_pipeline(const ToricFamily &t) {
    PipelineReport r;
    r.mode = "toric";
    r.spectrum_path = "toric-closed-form";
    if (t.kind == ToricFamily::Kind::box) {
        if (t.exponents.empty()) throw InvalidInput("toric box needs at least one exponent");
        r.dim = static_cast<std::int64_t>(t.exponents.size());
        r.family = "box";
        r.spectrum = toric_spectrum_box(t.exponents);
        r.vertices.push_back(Point(t.exponents.size(), 0));
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            Point v(t.exponents.size(), 0);
            v[i] = t.exponents[i];
            r.vertices.push_back(v);
        }
    } else {
        r.dim = 3;
        r.family = "reeve";
        r.spectrum = toric_spectrum_reeve(t.h);
        r.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, t.h}};
    }
    r.mu = total(r.spectrum);
    detail::finish_from_spectrum(r);
    return r;
}

inline PipelineReport run_pipeline(const JobSpec &job) {
    if (const auto *t = std::get_if<ToricFamily>(&job.input)) return run_pipeline(*t);
    return run_pipeline(resolve(std::get<PolytopeInput>(job.input)), job.enumeration);
}

inline Json to_json(const PipelineReport &r) {
    Json j;
    Json in;
    in["mode"] = r.mode;
    in["dim"] = r.dim;
    if (!r.family.empty()) in["family"] = r.family;
    Json vs = Json::array();
    for (const auto &v : r.vertices) vs.push_back(v);
    in["vertices"] = vs;
    j["input"] = in;

    if (r.weight) {
        j["weight"] = to_json(r.weight->q);
        j["weight_sorted"] = to_json(r.weight->sorted());
        j["reduced"] = *r.reduced;
        j["origin_barycentric"] = to_json(r.barycentric);
    }
    j["milnor_number"] = big_to_json(r.mu);
    j["spectrum"] = {{"path", r.spectrum_path}, {"value", r.spectrum.to_string()}, {"display", r.spectrum.to_display()}};
    Json stats;
    stats["mu"] = big_to_json(r.stats.mu);
    stats["mean"] = r.stats.mean.to_string();
    stats["variance"] = r.stats.variance.to_string();
    stats["is_integral"] = r.stats.is_integral;
    stats["unimodal"] = r.stats.unimodal_integer_part ? Json(*r.stats.unimodal_integer_part) : Json(nullptr);
    stats["variance_at_least_n_over_12"] = r.stats.variance_at_least_n_over_12;
    j["stats"] = stats;
    j["delta"] = to_json(r.delta);
    j["ehrhart"] = r.ehrhart.to_string();
    Json w = Json::array();
    for (const auto &c : r.weighted)
        w.push_back({{"alpha", c.alpha.to_string()}, {"delta", c.delta.to_string()}, {"ehrhart", c.ehrhart.to_string()}});
    j["weighted"] = w;
    Json refl;
    if (!r.facet_normals.empty()) {
        Json polar = Json::array();
        for (const auto &u : r.facet_normals) polar.push_back(to_json(u));
        refl["polar_vertices"] = polar;
    }
    refl["geometric"] = r.reflexive_geometric ? Json(*r.reflexive_geometric) : Json(nullptr);
    refl["spectrum_integral"] = r.spectrum_integral;
    refl["spectrum_equals_delta"] = r.spectrum_equals_delta;
    j["reflexive"] = refl;
    j["warnings"] = r.warnings;
    return j;
}

/// Keys of the full report relevant to one subcommand.
inline Json select_for(const Json &full, Command c) {
    std::vector<std::string> keys{"input"};
    switch (c) {
    case Command::weight: keys.insert(keys.end(), {"weight", "weight_sorted", "reduced", "milnor_number", "origin_barycentric"}); break;
    case Command::spectrum: keys.insert(keys.end(), {"weight", "reduced", "milnor_number", "spectrum", "stats"}); break;
    case Command::delta: keys.insert(keys.end(), {"spectrum", "delta"}); break;
    case Command::ehrhart: keys.insert(keys.end(), {"delta", "ehrhart"}); break;
    case Command::weighted: keys.insert(keys.end(), {"spectrum", "weighted"}); break;
    case Command::reflexive: keys.insert(keys.end(), {"spectrum", "delta", "reflexive"}); break;
    default: return full;
    }
    keys.push_back("warnings");
    Json out;
    for (const auto &k : keys)
        if (full.contains(k)) out[k] = full[k];
    return out;
}

namespace detail {

inline std::string join(const std::vector<std::string> &parts, const std::string &sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

inline std::string tuple_of(const std::vector<BigInt> &v) {
    std::vector<std::string> p;
    for (const auto &x : v) p.push_back(x.str());
    return "(" + join(p) + ")";
}

inline std::string tuple_of(const std::vector<Rat> &v) {
    std::vector<std::string> p;
    for (const auto &x : v) p.push_back(x.to_string());
    return "(" + join(p) + ")";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace detail

inline std::string to_text(const PipelineReport &r, Command c) {
    using detail::tuple_of;
    using detail::yes_no;
    std::ostringstream os;
    auto show_weight = [&] {
        if (!r.weight) {
            os << "weight: n/a (not a simplex)\n";
            return;
        }
        os << "weight: " << tuple_of(r.weight->q) << "\n";
        os << "weight (sorted): " << tuple_of(r.weight->sorted()) << "\n";
        os << "reduced: " << yes_no(*r.reduced) << "\n";
        os << "milnor number: " << r.mu << "\n";
        os << "origin barycentric: " << tuple_of(r.barycentric) << "\n";
    };
    auto show_spectrum = [&] {
        os << "spectrum [" << r.spectrum_path << "]: " << r.spectrum.to_display() << "\n";
        os << "spectrum (canonical): " << r.spectrum.to_string() << "\n";
    };
    auto show_stats = [&] {
        os << "mu: " << r.stats.mu << "\n";
        os << "mean: " << r.stats.mean << "\n";
        os << "variance: " << r.stats.variance << "\n";
        os << "integral: " << yes_no(r.stats.is_integral) << "\n";
        os << "unimodal: "
           << (r.stats.unimodal_integer_part ? yes_no(*r.stats.unimodal_integer_part) : std::string("n/a")) << "\n";
        os << "variance >= n/12: " << yes_no(r.stats.variance_at_least_n_over_12) << "\n";
    };
    auto show_delta = [&] { os << "delta: " << tuple_of(r.delta) << "\n"; };
    auto show_ehrhart = [&] { os << "ehrhart: " << r.ehrhart << "\n"; };
    auto show_weighted = [&] {
        for (const auto &w : r.weighted)
            os << "alpha " << w.alpha << ": delta = " << w.delta.to_display() << ", L = " << w.ehrhart << "\n";
    };
    auto show_reflexive = [&] {
        if (!r.facet_normals.empty()) {
            std::vector<std::string> p;
            for (const auto &u : r.facet_normals) p.push_back(to_string(u));
            os << "polar vertices: " << detail::join(p) << "\n";
        }
        if (r.reflexive_geometric) os << "reflexive (integral polar): " << yes_no(*r.reflexive_geometric) << "\n";
        os << "spectrum integral: " << yes_no(r.spectrum_integral) << "\n";
        os << "spectrum equals delta: " << yes_no(r.spectrum_equals_delta) << "\n";
    };
    switch (c) {
    case Command::weight: show_weight(); break;
    case Command::spectrum: show_spectrum(); show_stats(); break;
    case Command::delta: show_spectrum(); show_delta(); break;
    case Command::ehrhart: show_delta(); show_ehrhart(); break;
    case Command::weighted: show_spectrum(); show_weighted(); break;
    case Command::reflexive: show_spectrum(); show_delta(); show_reflexive(); break;
    default:
        if (r.mode != "toric") show_weight();
        show_spectrum();
        show_stats();
        show_delta();
        show_ehrhart();
        show_weighted();
        show_reflexive();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Verify

struct Check {
    enum class Status { pass, fail, skip };
    std::string name;
    Status status = Status::pass;
    std::string detail;
};

inline const char *to_string(Check::Status s) {
    switch (s) {
    case Check::Status::pass: return "pass";
    case Check::Status::fail: return "fail";
    default: return "skip";
    }
}

struct VerifyReport {
    std::vector<Check> checks;
    std::vector<DilateCount> counts;
    // L(-m), m = 1..n+1: recorded for inspection only.
    std::vector<std::pair<std::int64_t, Rat>> negative_evaluations;

    bool passed() const {
        for (const auto &c : checks)
            if (c.status == Check::Status::fail) return false;
        return true;
    }
};

inline Check make_check(std::string name, bool ok, std::string detail = {}) {
    return Check{std::move(name), ok ? Check::Status::pass : Check::Status::fail, std::move(detail)};
}

/// Compares L(m) with counts[m]; the detail names the first failing m.
inline Check check_ehrhart_against_counts(const RatPoly &l, const std::vector<BigInt> &counts) {
    for (std::size_t m = 0; m < counts.size(); ++m) {
        Rat v = l.eval(Rat(static_cast<std::int64_t>(m)));
        if (v != Rat(counts[m]))
            return make_check("ehrhart_vs_counts", false,
                              "witness m=" + std::to_string(m) + ": L(m)=" + v.to_string() +
                                  " but enumeration counts " + counts[m].str());
    }
    return make_check("ehrhart_vs_counts", true, "m=0.." + std::to_string(counts.size() - 1));
}

inline VerifyReport run_verify(const ResolvedPolytope &p, const std::optional<std::vector<BigInt>> &claimed_delta,
                               const EnumerationOptions &opt = {}) {
    VerifyReport v;
    const PipelineReport r = run_pipeline(p, opt);
    const std::int64_t n = r.dim;
    const NuHistogram hist = nu_histogram(p.h, n + 1, opt);
    const FracPoly enumerated = spectrum_from_histogram(hist);
    const std::vector<BigInt> counts = dilate_counts(hist);
    for (std::int64_t m = 0; m <= n + 1; ++m) v.counts.push_back(hist.dilate(m));

    if (r.spectrum_path == "closed-form")
        v.checks.push_back(make_check("closed_form_vs_enumeration", r.spectrum == enumerated,
                                      "closed form " + r.spectrum.to_string() + ", enumeration " + enumerated.to_string()));
    else
        v.checks.push_back({"closed_form_vs_enumeration", Check::Status::skip, "no closed form for this input"});

    // Oracle-independent normalized volume: n! times the leading coefficient.
    const RatPoly interpolated = ehrhart_from_counts(std::vector<BigInt>(counts.begin(), counts.begin() + n + 1));
    const Rat volume_mu = interpolated.leading() * Rat(factorial(n));
    v.checks.push_back(make_check("milnor_total", Rat(total(r.spectrum)) == Rat(r.mu) && volume_mu == Rat(r.mu),
                                  "total " + total(r.spectrum).str() + ", mu " + r.mu.str() + ", n!vol " +
                                      volume_mu.to_string()));

    v.checks.push_back(make_check("symmetry", reflect(r.spectrum, n) == r.spectrum));

    FracPoly interior_band;
    for (const auto &[k, c] : hist.counts)
        if (hist.nu(k) < Rat(1)) interior_band.add_term(hist.nu(k), c);
    const FracPoly low = restrict_to(r.spectrum, {Rat(0), Rat(1), true, false});
    v.checks.push_back(make_check("low_band_interior", low == interior_band,
                                  "spectrum on [0,1): " + low.to_string() + ", interior points: " +
                                      interior_band.to_string()));

    const BigInt mult_one = r.spectrum.coefficient(Rat(1));
    const BigInt boundary = hist.dilate(1).boundary_count;
    v.checks.push_back(make_check("boundary_multiplicity", mult_one == boundary - n,
                                  "multiplicity of 1 is " + mult_one.str() + ", boundary points " + boundary.str()));

    const auto series_delta = delta_from_counts(counts, n);
    v.checks.push_back(make_check("delta_binning_vs_series", series_delta == r.delta,
                                  "binning " + detail::tuple_of(r.delta) + ", series " + detail::tuple_of(series_delta)));

    BigInt delta_sum = 0;
    for (const auto &d : r.delta) delta_sum += d;
    v.checks.push_back(make_check("delta_low_coefficients",
                                  r.delta[0] == 1 && r.delta[1] == counts[1] - (n + 1) && delta_sum == r.mu));

    if (claimed_delta) {
        if (claimed_delta->size() != static_cast<std::size_t>(n) + 1)
            throw InvalidInput("claimed_delta must have n+1 entries");
        v.checks.push_back(check_ehrhart_against_counts(delta_to_ehrhart(*claimed_delta, n), counts));
    } else {
        v.checks.push_back(check_ehrhart_against_counts(r.ehrhart, counts));
    }

    v.checks.push_back(make_check("ehrhart_vs_interpolation", interpolated == r.ehrhart,
                                  "closed form " + r.ehrhart.to_string() + ", interpolated " + interpolated.to_string()));

    const auto series = ehrhart_series_truncated(r.delta, n, static_cast<std::size_t>(n) + 3);
    bool series_ok = true;
    for (std::size_t m = 0; m < series.size(); ++m)
        series_ok = series_ok && Rat(series[m]) == r.ehrhart.eval(Rat(static_cast<std::int64_t>(m)));
    v.checks.push_back(make_check("series_vs_polynomial", series_ok));

    FracPoly class_sum;
    RatPoly weighted_sum;
    for (const auto &w : r.weighted) {
        class_sum += w.delta;
        weighted_sum += w.ehrhart;
    }
    v.checks.push_back(make_check("weighted_partition", class_sum == delta_as_fracpoly(r.delta)));
    v.checks.push_back(make_check("weighted_ehrhart_sum", weighted_sum == r.ehrhart));

    std::set<Rat> alphas;
    for (const auto &[k, c] : hist.counts) {
        Rat nu = hist.nu(k);
        alphas.insert(nu - Rat(nu.ceil()));
    }
    for (const auto &w : r.weighted) alphas.insert(w.alpha);
    std::string witness;
    for (const auto &alpha : alphas) {
        RatPoly l;
        for (const auto &w : r.weighted)
            if (w.alpha == alpha) l = w.ehrhart;
        for (std::int64_t m = 0; m <= n + 1 && witness.empty(); ++m) {
            BigInt counted = weighted_count(hist, m, alpha);
            if (l.eval(Rat(m)) != Rat(counted))
                witness = "alpha=" + alpha.to_string() + " m=" + std::to_string(m) + ": L=" +
                          l.eval(Rat(m)).to_string() + " counted " + counted.str();
        }
    }
    v.checks.push_back(make_check("weighted_counts", witness.empty(), witness));

    const bool geometric = is_reflexive_geometric(p.h);
    const bool integral = spectrum_is_integral(r.spectrum);
    const bool equals_delta = r.spectrum == delta_as_fracpoly(series_delta);
    v.checks.push_back(make_check("reflexivity_equivalence", geometric == integral && integral == equals_delta,
                                  std::string("geometric ") + detail::yes_no(geometric) + ", integral " +
                                      detail::yes_no(integral) + ", spec=delta " + detail::yes_no(equals_delta)));

    for (std::int64_t m = 1; m <= n + 1; ++m) v.negative_evaluations.emplace_back(m, r.ehrhart.eval(Rat(-m)));
    return v;
}

inline VerifyReport run_verify(const ToricFamily &t, const EnumerationOptions &opt = {}) {
    VerifyReport v;
    const PipelineReport r = run_pipeline(t);
    const std::int64_t n = r.dim;
    if (t.kind == ToricFamily::Kind::box) {
        const auto hs = simplex_halfspaces(r.vertices);
        const auto counts = dilate_counts(hs, n + 1, opt);
        for (std::int64_t m = 0; m <= n + 1; ++m) v.counts.push_back(count_dilate(hs, m, opt));
        v.checks.push_back(check_ehrhart_against_counts(r.ehrhart, counts));
        const auto series_delta = delta_from_counts(counts, n);
        v.checks.push_back(make_check("delta_binning_vs_series", series_delta == r.delta,
                                      "binning " + detail::tuple_of(r.delta) + ", series " +
                                          detail::tuple_of(series_delta)));
        BigInt product = 1;
        for (auto a : t.exponents) product *= a;
        v.checks.push_back(make_check("milnor_total", total(r.spectrum) == product));
    } else {
        const std::vector<BigInt> expected{1, 1, t.h, 0};
        v.checks.push_back(make_check("reeve_delta_closed_form", r.delta == expected, detail::tuple_of(r.delta)));
        const RatPoly closed = Rat(1, 6) * RatPoly({Rat(6), Rat(13 - t.h), Rat(9), Rat(t.h + 2)});
        v.checks.push_back(make_check("reeve_ehrhart_closed_form", closed == r.ehrhart, r.ehrhart.to_string()));
        v.checks.push_back({"ehrhart_vs_counts", Check::Status::skip,
                            "non-simplex toric polytope; enumeration cross-check lives in the test suite"});
    }
    const auto series = ehrhart_series_truncated(r.delta, n, static_cast<std::size_t>(n) + 3);
    bool series_ok = true;
    for (std::size_t m = 0; m < series.size(); ++m)
        series_ok = series_ok && Rat(series[m]) == r.ehrhart.eval(Rat(static_cast<std::int64_t>(m)));
    v.checks.push_back(make_check("series_vs_polynomial", series_ok));
    for (std::int64_t m = 1; m <= n + 1; ++m) v.negative_evaluations.emplace_back(m, r.ehrhart.eval(Rat(-m)));
    return v;
}

inline VerifyReport run_verify(const JobSpec &job) {
    if (const auto *t = std::get_if<ToricFamily>(&job.input)) return run_verify(*t, job.enumeration);
    const auto &in = std::get<PolytopeInput>(job.input);
    return run_verify(resolve(in), in.claimed_delta, job.enumeration);
}

inline Json to_json(const VerifyReport &v) {
    Json j;
    Json checks = Json::array();
    for (const auto &c : v.checks)
        checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    j["checks"] = checks;
    Json counts = Json::array();
    for (const auto &c : v.counts)
        counts.push_back({{"m", c.m},
                          {"count", big_to_json(c.count)},
                          {"boundary", big_to_json(c.boundary_count)},
                          {"interior", big_to_json(c.interior_count)}});
    j["counts"] = counts;
    Json neg = Json::array();
    for (const auto &[m, value] : v.negative_evaluations) neg.push_back({{"m", -m}, {"L", value.to_string()}});
    j["ehrhart_at_negative_integers"] = neg;
    j["passed"] = v.passed();
    return j;
}

inline std::string to_text(const VerifyReport &v) {
    std::ostringstream os;
    for (const auto &c : v.checks) {
        os << "[" << to_string(c.status) << "] " << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    os << "L(-m):";
    for (const auto &[m, value] : v.negative_evaluations) os << " L(" << -m << ")=" << value;
    os << "\n" << (v.passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

inline std::string counts_csv(const std::vector<DilateCount> &counts) {
    std::string s = "m,count,boundary,interior\n";
    for (const auto &c : counts)
        s += std::to_string(c.m) + "," + c.count.str() + "," + c.boundary_count.str() + "," +
             c.interior_count.str() + "\n";
    return s;
}

// ---------------------------------------------------------------------------
// Bench

struct BenchOptions {
    std::size_t count = 20;
    std::size_t dim = 3;
    std::int64_t max_coord = 4;
    std::uint64_t seed = 1;
    EnumerationOptions enumeration;
};

/// CSV of closed-form vs enumeration timings over random reduced simplices.
inline std::string run_bench(const BenchOptions &opt) {
    using Clock = std::chrono::steady_clock;
    std::mt19937_64 rng(opt.seed);
    std::string csv = "index,dim,weights,mu,closed_form_us,enumeration_us,agree\n";
    for (std::size_t i = 0; i < opt.count; ++i) {
        auto s = random_reduced_simplex(rng, opt.dim, opt.max_coord);
        if (!s) throw InvalidInput("could not sample a reduced simplex with the given bounds");
        const auto t0 = Clock::now();
        const FracPoly closed = spectrum_reduced_simplex(s->weight());
        const auto t1 = Clock::now();
        const FracPoly enumerated = spectrum_by_enumeration(facet_normals(*s), opt.enumeration);
        const auto t2 = Clock::now();
        std::vector<std::string> w;
        for (const auto &q : s->weight().q) w.push_back(q.str());
        csv += std::to_string(i) + "," + std::to_string(opt.dim) + "," + detail::join(w, " ") + "," +
               milnor_number(s->weight()).str() + "," +
               std::to_string(std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()) + "," +
               std::to_string(std::chrono::duration_cast<std::chrono::microseconds>(t2 - t1).count()) + "," +
               (closed == enumerated ? "1" : "0") + "\n";
    }
    return csv;
}

} // namespace ehrspec
