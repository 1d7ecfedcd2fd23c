// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eucalc/document.hpp"
#include "eucalc/errors.hpp"
#include "eucalc/suite.hpp"

namespace {

using namespace eucalc;

struct Options {
    std::string input, input2, output, output2, map, gamma, point, plane;
    std::string mode = "eim";
    int chart = 1;
    int max_cells = kDefaultMaxCells;
    int oversample = 3;
    std::uint64_t seed = 0;
};

AffineCF expect_affine(CFVariant cf, const std::string& what) {
    if (!std::holds_alternative<AffineCF>(cf))
        throw InputError(what + ": expected an affine document");
    return std::get<AffineCF>(std::move(cf));
}

ProjectiveCF expect_projective(CFVariant cf, const std::string& what) {
    if (!std::holds_alternative<ProjectiveCF>(cf))
        throw InputError(what + ": expected a projective document");
    return std::get<ProjectiveCF>(std::move(cf));
}

void write_output(const Options& opt, CFVariant cf, const std::string& name) {
    if (opt.output.empty()) throw InputError("missing --output");
    save_cf(cf, opt.output, name);
    std::cout << "wrote " << opt.output << "\n";
}

AffineForm parse_plane(const std::string& text) {
    RatVector v = parse_rat_vector(text);
    if (v.size() != 4) throw InputError("--plane expects four rationals a,b,c,d");
    AffineForm f;
    f.constant = v.back();
    v.pop_back();
    f.linear = std::move(v);
    return f;
}

int dispatch(const std::string& cmd, const Options& opt) {
    const EngineOptions eopts{opt.max_cells, opt.oversample, opt.seed};
    auto load = [&](const std::string& path) { return load_cf(path, opt.max_cells); };

    if (cmd == "eval") {
        CFVariant cf = load(opt.input);
        RatVector p = parse_rat_vector(opt.point);
        const Int v = std::holds_alternative<AffineCF>(cf)
                          ? evaluate(std::get<AffineCF>(cf), p)
                          : evaluate_proj(std::get<ProjectiveCF>(cf), p);
        std::cout << v << "\n";
        return 0;
    }
    if (cmd == "integrate" || cmd == "integrate-np") {
        CFVariant cf = load(opt.input);
        Int v;
        if (std::holds_alternative<AffineCF>(cf)) {
            const auto& f = std::get<AffineCF>(cf);
            v = cmd == "integrate" ? integrate(f) : integrate_np(f);
        } else {
            const auto& f = std::get<ProjectiveCF>(cf);
            v = cmd == "integrate" ? integrate_proj(f) : integrate_proj(dual_proj(f));
        }
        std::cout << v << "\n";
        return 0;
    }
    if (cmd == "dual") {
        CFVariant cf = load(opt.input);
        if (std::holds_alternative<AffineCF>(cf))
            write_output(opt, dual(std::get<AffineCF>(cf)), "dual");
        else
            write_output(opt, dual_proj(std::get<ProjectiveCF>(cf)), "dual");
        return 0;
    }
    if (cmd == "add" || cmd == "mul") {
        CFVariant a = load(opt.input);
        CFVariant b = load(opt.input2);
        if (std::holds_alternative<AffineCF>(a) && std::holds_alternative<AffineCF>(b)) {
            const auto& fa = std::get<AffineCF>(a);
            const auto& fb = std::get<AffineCF>(b);
            write_output(opt, cmd == "add" ? add(fa, fb, opt.max_cells) : multiply(fa, fb, opt.max_cells), cmd);
        } else if (std::holds_alternative<ProjectiveCF>(a) && std::holds_alternative<ProjectiveCF>(b)) {
            const auto& fa = std::get<ProjectiveCF>(a);
            const auto& fb = std::get<ProjectiveCF>(b);
            write_output(opt,
                         cmd == "add" ? add_proj(fa, fb, opt.max_cells) : multiply_proj(fa, fb, opt.max_cells),
                         cmd);
        } else {
            throw InputError(cmd + ": inputs must both be affine or both projective");
        }
        return 0;
    }
    if (cmd == "pull" || cmd == "push" || cmd == "push-np") {
        AffineCF cf = expect_affine(load(opt.input), cmd);
        if (opt.map.empty()) throw InputError(cmd + ": missing --map");
        AffineMap m = load_affine_map(opt.map);
        AffineCF out = cmd == "pull"     ? pullback(cf, m, opt.max_cells)
                       : cmd == "push"   ? pushforward(cf, m, eopts)
                                         : pushforward_np(cf, m, eopts);
        write_output(opt, std::move(out), cmd);
        return 0;
    }
    if (cmd == "convolve" || cmd == "convolve-np") {
        AffineCF a = expect_affine(load(opt.input), cmd);
        AffineCF b = expect_affine(load(opt.input2), cmd);
        write_output(opt, cmd == "convolve" ? convolve(a, b, eopts) : convolve_np(a, b, eopts), cmd);
        return 0;
    }
    if (cmd == "gamma-project") {
        AffineCF cf = expect_affine(load(opt.input), cmd);
        if (opt.gamma.empty()) throw InputError("gamma-project: missing --gamma");
        write_output(opt, gamma_project(cf, load_polyhedron(opt.gamma), eopts), cmd);
        return 0;
    }
    if (cmd == "embed") {
        AffineCF cf = expect_affine(load(opt.input), cmd);
        if (opt.mode == "eim")
            write_output(opt, embed_eim(cf, opt.max_cells), "embed");
        else if (opt.mode == "oim")
            write_output(opt, embed_oim(cf, opt.max_cells), "embed");
        else
            throw InputError("embed: --mode must be eim or oim");
        return 0;
    }
    if (cmd == "restrict") {
        ProjectiveCF cf = expect_projective(load(opt.input), cmd);
        write_output(opt, restrict_chart(cf, opt.chart, opt.max_cells), "restrict");
        return 0;
    }
    if (cmd == "radon" || cmd == "radon-dual") {
        ProjectiveCF cf = expect_projective(load(opt.input), cmd);
        write_output(opt, cmd == "radon" ? radon_p2(cf, eopts) : radon_dual_p2(cf, eopts), cmd);
        return 0;
    }
    if (cmd == "radon-invert") {
        ProjectiveCF cf = expect_projective(load(opt.input), cmd);
        RadonInversion inv = radon_invert_check(cf, eopts);
        std::cout << "equal: " << (inv.equal ? "true" : "false") << "\n";
        if (!opt.output.empty()) save_cf(inv.lhs, opt.output, "radon-invert lhs");
        if (!opt.output2.empty()) save_cf(inv.rhs, opt.output2, "radon-invert rhs");
        return inv.equal ? 0 : 3;
    }
    if (cmd == "slice-eval") {
        AffineCF cf = expect_affine(load(opt.input), cmd);
        std::cout << slice_eval_r3(cf, parse_plane(opt.plane), opt.max_cells) << "\n";
        return 0;
    }
    if (cmd == "betti-slice") {
        AffineCF cf = expect_affine(load(opt.input), cmd);
        BettiPair betti = betti_slice(cf);
        std::cout << betti.b0 << " " << betti.b1 << "\n";
        return 0;
    }
    if (cmd == "check-suite") {
        SuiteOptions sopts{opt.seed, opt.max_cells, opt.oversample};
        bool all = true;
        for (const auto& r : run_acceptance_suite(sopts)) {
            all = all && r.pass;
            std::printf("%s %-24s (%6.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                        r.seconds, r.detail.c_str());
        }
        return all ? 0 : 3;
    }
    throw InputError("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eucalc: exact Euler calculus for piecewise linear constructible functions"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) sub->add_option("--input", opt.input, "input document")->required();
        sub->add_option("--max-cells", opt.max_cells, "cell budget for arrangement construction");
        sub->add_option("--oversample", opt.oversample, "extra validation points per output cell");
        sub->add_option("--seed", opt.seed, "seed for randomized validation points");
        return sub;
    };

    add_common(app.add_subcommand("eval", "value of a function at a point"), true)
        ->add_option("--point", opt.point, "comma separated rational coordinates")
        ->required();
    add_common(app.add_subcommand("integrate", "Euler integral"), true);
    add_common(app.add_subcommand("integrate-np", "non-proper Euler integral"), true);
    add_common(app.add_subcommand("dual", "duality involution"), true)
        ->add_option("--output", opt.output, "output document");
    for (const char* name : {"add", "mul"}) {
        auto* sub = add_common(app.add_subcommand(name, name[0] == 'a' ? "pointwise sum"
                                                                       : "pointwise product"),
                               true);
        sub->add_option("--input2", opt.input2, "second input document")->required();
        sub->add_option("--output", opt.output, "output document");
    }
    for (const char* name : {"pull", "push", "push-np"}) {
        auto* sub = add_common(app.add_subcommand(name, "inverse / direct image along an affine map"),
                               true);
        sub->add_option("--map", opt.map, "affine map document")->required();
        sub->add_option("--output", opt.output, "output document");
    }
    for (const char* name : {"convolve", "convolve-np"}) {
        auto* sub = add_common(app.add_subcommand(name, "additive convolution"), true);
        sub->add_option("--input2", opt.input2, "second input document")->required();
        sub->add_option("--output", opt.output, "output document");
    }
    {
        auto* sub = add_common(app.add_subcommand("gamma-project", "projector onto cone-constructible functions"), true);
        sub->add_option("--gamma", opt.gamma, "cone document")->required();
        sub->add_option("--output", opt.output, "output document");
    }
    {
        auto* sub = add_common(app.add_subcommand("embed", "extend an affine function to projective space"), true);
        sub->add_option("--mode", opt.mode, "eim (extend by zero) or oim (dual extension)");
        sub->add_option("--output", opt.output, "output document");
    }
    {
        auto* sub = add_common(app.add_subcommand("restrict", "restrict a projective function to a chart"), true);
        sub->add_option("--chart", opt.chart, "chart index, 1-based");
        sub->add_option("--output", opt.output, "output document");
    }
    for (const char* name : {"radon", "radon-dual"}) {
        auto* sub = add_common(app.add_subcommand(name, "line transform on the projective plane"), true);
        sub->add_option("--output", opt.output, "output document");
    }
    {
        auto* sub = add_common(app.add_subcommand("radon-invert", "double transform inversion check"), true);
        sub->add_option("--output", opt.output, "document for the transformed side");
        sub->add_option("--output2", opt.output2, "document for the closed-form side");
    }
    {
        auto* sub = add_common(app.add_subcommand("slice-eval", "integral over an affine plane in R^3"), true);
        sub->add_option("--plane", opt.plane, "plane a,b,c,d meaning ax+by+cz+d = 0")->required();
    }
    add_common(app.add_subcommand("betti-slice", "b0 and b1 of a compact planar support"), true);
    add_common(app.add_subcommand("check-suite", "run the full identity battery"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, opt);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
