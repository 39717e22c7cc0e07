// Command-line front-end: reproducible resonance tables, transmission scans,
// Darboux deformations and bound-state tables, emitted as CSV or JSON.
//
// Exit codes: 0 success, 1 computational failure, 2 usage error.
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sqres/darboux.hpp"
#include "sqres/gamow.hpp"
#include "sqres/potentials.hpp"
#include "sqres/resonances.hpp"
#include "sqres/scattering.hpp"

using json = nlohmann::ordered_json;
using namespace sqres;
using cd = std::complex<double>;

namespace {

struct CommonOpts {
    std::string kind = "well";
    double v0 = 0;
    double b = 0;
    std::string format = "csv";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--kind", o.kind, "well or barrier")
        ->check(CLI::IsMember({"well", "barrier"}))
        ->required();
    cmd->add_option("--v0", o.v0, "potential strength, > 0")
        ->check(CLI::PositiveNumber)
        ->required();
    cmd->add_option("--b", o.b, "potential width, > 0")
        ->check(CLI::PositiveNumber)
        ->required();
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "output path (default: stdout)");
}

PotentialSpec<double> spec_of(const CommonOpts& o) {
    return {o.kind == "well" ? Kind::Well : Kind::Barrier, o.v0, o.b};
}

json config_json(const CommonOpts& o) {
    return {{"kind", o.kind}, {"v0", o.v0}, {"b", o.b}};
}

// 9 significant digits, '.' decimal point, no locale surprises
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

int write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 1;
    }
    f << text;
    return 0;
}

std::vector<Resonance<double>> analytic_list(const PotentialSpec<double>& spec,
                                             int count) {
    return spec.kind == Kind::Well ? analytic_well_resonances(spec, count)
                                   : analytic_barrier_resonances(spec, count);
}

// ---------------------------------------------------------------- resonances

int cmd_resonances(const CommonOpts& o, int count) {
    const auto spec = spec_of(o);
    const auto ana = analytic_list(spec, count);
    std::vector<Resonance<double>> refined;
    for (const auto& a : ana)
        refined.push_back(refine_pole(spec, k_seed(a.E, a.Gamma / 2)));

    if (o.format == "csv") {
        std::string s =
            "index,E_analytic,half_width_analytic,E_refined,"
            "half_width_refined,dE_abs,dE_rel,dG_abs\n";
        for (std::size_t i = 0; i < ana.size(); ++i) {
            const double dE = std::abs(ana[i].E - refined[i].E);
            const double dG =
                std::abs(ana[i].Gamma - refined[i].Gamma) / 2;
            s += std::to_string(ana[i].index) + "," + fmt(ana[i].E) + "," +
                 fmt(ana[i].Gamma / 2) + "," + fmt(refined[i].E) + "," +
                 fmt(refined[i].Gamma / 2) + "," + fmt(dE) + "," +
                 fmt(dE / refined[i].E) + "," + fmt(dG) + "\n";
        }
        return write_output(o.out, s);
    }
    json rows = json::array();
    json flags = json::array();
    for (std::size_t i = 0; i < ana.size(); ++i) {
        rows.push_back({{"index", ana[i].index},
                        {"E_analytic", ana[i].E},
                        {"half_width_analytic", ana[i].Gamma / 2},
                        {"E_refined", refined[i].E},
                        {"half_width_refined", refined[i].Gamma / 2},
                        {"k_re", refined[i].k->real()},
                        {"k_im", refined[i].k->imag()}});
        flags.push_back({{"index", ana[i].index},
                         {"narrow", ana[i].narrow},
                         {"above_spacing", ana[i].above_spacing},
                         {"width_to_spacing", ana[i].width_to_spacing}});
    }
    json doc = {{"config", config_json(o)},
                {"results", rows},
                {"diagnostics", {{"validity", flags}}}};
    doc["config"]["count"] = count;
    return write_output(o.out, doc.dump(2) + "\n");
}

// ---------------------------------------------------------------------- scan

int cmd_scan(const CommonOpts& o, double emin, double emax, int samples,
             const std::string& samples_out) {
    const auto spec = spec_of(o);
    ScanResult<double> res;
    bool no_peaks = false;
    std::string no_peaks_msg;
    try {
        res = scan_transmission(spec, emin, emax, samples);
    } catch (const NoPeaksError& e) {
        no_peaks = true;
        no_peaks_msg = e.what();
        // keep the sampled curve so it can still be written
        res.energies.resize(samples);
        res.T_values.resize(samples);
        const double h = (emax - emin) / (samples - 1);
        for (int i = 0; i < samples; ++i) {
            res.energies[i] = emin + h * i;
            res.T_values[i] = transmission_coefficient(spec, res.energies[i]);
        }
    }
    std::vector<FbwPeak<double>> fbw_peaks;
    for (const auto& p : res.peaks)
        if (p.accepted) fbw_peaks.push_back({p.center, p.width});

    if (!samples_out.empty() || o.format == "csv") {
        std::string s = "E,T,omega_N\n";
        for (std::size_t i = 0; i < res.energies.size(); ++i)
            s += fmt(res.energies[i]) + "," + fmt(res.T_values[i]) + "," +
                 fmt(fbw_sum(res.energies[i], fbw_peaks)) + "\n";
        if (!samples_out.empty()) {
            const int rc = write_output(samples_out, s);
            if (rc) return rc;
        }
    }

    if (o.format == "csv") {
        std::string s = "center,width,left_half,right_half,accepted\n";
        for (const auto& p : res.peaks)
            s += fmt(p.center) + "," + fmt(p.width) + "," + fmt(p.left_half) +
                 "," + fmt(p.right_half) + "," +
                 (p.accepted ? "true" : "false") + "\n";
        const int rc = write_output(o.out, s);
        if (rc) return rc;
    } else {
        json peaks = json::array();
        for (const auto& p : res.peaks)
            peaks.push_back({{"center", p.center},
                             {"width", p.width},
                             {"left_half", p.left_half},
                             {"right_half", p.right_half},
                             {"accepted", p.accepted}});
        json doc = {{"config", config_json(o)},
                    {"results", {{"peaks", peaks}}},
                    {"diagnostics",
                     {{"samples", samples},
                      {"accepted_count", fbw_peaks.size()}}}};
        doc["config"]["emin"] = emin;
        doc["config"]["emax"] = emax;
        if (no_peaks) doc["diagnostics"]["error"] = no_peaks_msg;
        const int rc = write_output(o.out, doc.dump(2) + "\n");
        if (rc) return rc;
    }
    if (no_peaks) {
        std::cerr << "error: " << no_peaks_msg << "\n";
        return 1;
    }
    return 0;
}

// -------------------------------------------------------------------- deform

cd refined_pole_by_index(const PotentialSpec<double>& spec, int index) {
    // wells label poles m = 0, 1, ...; barriers n = 1, 2, ...
    const int count = spec.kind == Kind::Well ? index + 1 : index;
    const auto ana = analytic_list(spec, count);
    const auto& a = ana.back();
    return *refine_pole(spec, k_seed(a.E, a.Gamma / 2)).k;
}

int cmd_deform(const CommonOpts& o, int order, std::optional<int> pole_index,
               std::optional<double> k_re, std::optional<double> k_im,
               double xmin, double xmax, int points, bool argand) {
    const auto spec = spec_of(o);
    if (order == 2 && !pole_index) {
        std::cerr << "error: --order 2 requires --pole-index\n";
        return 2;
    }
    if (order == 1 && !pole_index && (!k_re || !k_im)) {
        std::cerr << "error: --order 1 needs --pole-index or --k-re/--k-im\n";
        return 2;
    }

    const auto xs = [&](int i) { return xmin + i * ((xmax - xmin) / (points - 1)); };

    if (order == 2) {
        const cd k = refined_pole_by_index(spec, *pole_index);
        const auto V2 = deform2(spec, k);
        if (o.format == "csv") {
            std::string s = "x,V2\n";
            for (int i = 0; i < points; ++i)
                s += fmt(xs(i)) + "," + fmt(V2(xs(i))) + "\n";
            return write_output(o.out, s);
        }
        json X = json::array(), V = json::array();
        for (int i = 0; i < points; ++i) {
            X.push_back(xs(i));
            V.push_back(V2(xs(i)));
        }
        json doc = {{"config", config_json(o)},
                    {"results", {{"x", X}, {"V2", V}}},
                    {"diagnostics",
                     {{"pole_re", k.real()}, {"pole_im", k.imag()}}}};
        doc["config"]["order"] = 2;
        doc["config"]["pole_index"] = *pole_index;
        return write_output(o.out, doc.dump(2) + "\n");
    }

    // order 1: Decaying at a refined pole, or Decreasing at an explicit k
    GamowFunction<double> g =
        pole_index ? build_gamow(spec, refined_pole_by_index(spec, *pole_index),
                                 GamowVariant::Decaying)
                   : build_gamow(spec, cd(*k_re, *k_im),
                                 GamowVariant::Decreasing);
    const auto Vt = deform1(g);

    if (o.format == "csv") {
        std::string s = argand ? "re_V,im_V\n" : "x,re_V,im_V\n";
        for (int i = 0; i < points; ++i) {
            const cd v = Vt(xs(i));
            if (!argand) s += fmt(xs(i)) + ",";
            s += fmt(v.real()) + "," + fmt(v.imag()) + "\n";
        }
        return write_output(o.out, s);
    }
    json X = json::array(), RE = json::array(), IM = json::array();
    for (int i = 0; i < points; ++i) {
        const cd v = Vt(xs(i));
        X.push_back(xs(i));
        RE.push_back(v.real());
        IM.push_back(v.imag());
    }
    json doc = {{"config", config_json(o)},
                {"results", {{"x", X}, {"re_V", RE}, {"im_V", IM}}},
                {"diagnostics", json::object()}};
    doc["config"]["order"] = 1;
    doc["diagnostics"]["k_re"] = g.k.real();
    doc["diagnostics"]["k_im"] = g.k.imag();

    // non-orthogonality of the deformed bound images, surfaced as a Gram
    // matrix (wells only; capped for runtime). Transformation functions
    // with real nodes make the images non-normalizable; report that
    // instead of a matrix.
    if (spec.kind == Kind::Well) try {
        const auto st = bound_states(spec);
        const int nst = std::min<int>(4, static_cast<int>(st.size()));
        std::vector<DeformedState<double>> ys;
        std::vector<double> scale(nst);
        for (int n = 0; n < nst; ++n) {
            scale[n] = 1.0 / std::sqrt(bound_state_norm(st[n], spec));
            ys.push_back(deform1_state(
                g,
                [spec, s = st[n]](double x) {
                    return bound_state_value(s, spec, x);
                },
                cd(st[n].E, 0)));
        }
        const double X0 = spec.b / 2 + 25;
        const int quad_n = 8000;
        json gram = json::array();
        for (int m = 0; m < nst; ++m) {
            json row = json::array();
            for (int n = 0; n < nst; ++n) {
                cd acc = 0;
                const double h = 2 * X0 / quad_n;
                for (int i = 0; i <= quad_n; ++i) {
                    const double x = -X0 + i * h;
                    const double w =
                        (i == 0 || i == quad_n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
                    acc += w * std::conj(ys[m](x).value) * ys[n](x).value;
                }
                acc *= (h / 3) * scale[m] * scale[n];
                row.push_back({{"re", acc.real()}, {"im", acc.imag()}});
            }
            gram.push_back(row);
        }
        doc["diagnostics"]["gram_y"] = gram;
    } catch (const NodeError& e) {
        doc["diagnostics"]["gram_y"] = nullptr;
        doc["diagnostics"]["gram_y_note"] = e.what();
    }
    return write_output(o.out, doc.dump(2) + "\n");
}

// --------------------------------------------------------------------- bound

int cmd_bound(const CommonOpts& o) {
    const auto spec = spec_of(o);
    const auto st = bound_states(spec); // DomainError for barriers
    if (o.format == "csv") {
        std::string s = "index,parity,rho,E,norm\n";
        for (std::size_t i = 0; i < st.size(); ++i)
            s += std::to_string(i) + "," + (st[i].even ? "even" : "odd") +
                 "," + fmt(st[i].rho) + "," + fmt(st[i].E) + "," +
                 fmt(bound_state_norm(st[i], spec)) + "\n";
        return write_output(o.out, s);
    }
    json rows = json::array();
    for (std::size_t i = 0; i < st.size(); ++i)
        rows.push_back({{"index", i},
                        {"parity", st[i].even ? "even" : "odd"},
                        {"rho", st[i].rho},
                        {"E", st[i].E},
                        {"norm", bound_state_norm(st[i], spec)}});
    json doc = {{"config", config_json(o)},
                {"results", rows},
                {"diagnostics", {{"count", st.size()}}}};
    return write_output(o.out, doc.dump(2) + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"square-model resonances, Gamow functions and Darboux "
                 "deformations"};
    app.require_subcommand(1);

    CommonOpts ro, so, dfo, bo;
    int count = 8;
    auto* res = app.add_subcommand("resonances",
                                   "analytic vs refined resonance table");
    add_common(res, ro);
    res->add_option("--count", count, "number of resonances")
        ->check(CLI::Range(1, 1000));

    double emin = 0, emax = 0;
    int samples = 20000;
    std::string samples_out;
    auto* scn = app.add_subcommand("scan", "transmission scan with peaks");
    add_common(scn, so);
    scn->add_option("--emin", emin, "window start, > 0")->required();
    scn->add_option("--emax", emax, "window end")->required();
    scn->add_option("--samples", samples, "grid size")->check(CLI::Range(100, 10000000));
    scn->add_option("--samples-out", samples_out,
                    "also write the sampled (E, T, omega_N) curve here");

    int order = 1, points = 801;
    double xmin = 0, xmax = 0;
    std::optional<int> pole_index;
    std::optional<double> k_re, k_im;
    bool argand = false;
    auto* dfm = app.add_subcommand("deform", "Darboux-deformed potentials");
    add_common(dfm, dfo);
    dfm->add_option("--order", order, "1 (complex) or 2 (real)")
        ->check(CLI::Range(1, 2));
    dfm->add_option("--pole-index", pole_index,
                    "resonance label (wells m>=0, barriers n>=1)");
    dfm->add_option("--k-re", k_re, "Re k for a Decreasing transformation");
    dfm->add_option("--k-im", k_im, "Im k for a Decreasing transformation");
    dfm->add_option("--xmin", xmin, "sampling start");
    dfm->add_option("--xmax", xmax, "sampling end");
    dfm->add_option("--points", points, "sample count")->check(CLI::Range(2, 1000000));
    dfm->add_flag("--argand", argand, "emit (Re V, Im V) pairs only");

    auto* bnd = app.add_subcommand("bound", "bound-state table (wells)");
    add_common(bnd, bo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (res->parsed()) return cmd_resonances(ro, count);
        if (scn->parsed()) return cmd_scan(so, emin, emax, samples, samples_out);
        if (dfm->parsed()) {
            if (xmin == 0 && xmax == 0) {
                xmin = -2 * dfo.b;
                xmax = 2 * dfo.b;
            }
            if (!(xmax > xmin)) {
                std::cerr << "error: --xmax must exceed --xmin\n";
                return 2;
            }
            return cmd_deform(dfo, order, pole_index, k_re, k_im, xmin, xmax,
                              points, argand);
        }
        return cmd_bound(bo);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
