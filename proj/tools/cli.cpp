#include "cli.hpp"

#include "tdc/mayer_vietoris.hpp"
#include "tdc/pairing.hpp"
#include "tdc/potential.hpp"
#include "tdc/sequences.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace tdc::cli {

namespace {

using json = nlohmann::ordered_json;

std::string joined(const std::vector<std::string>& words) {
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void add_table(Report& r, const std::string& prefix, const HodgeTable& t) {
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            r.add(Field{prefix + "h[" + std::to_string(p) + "][" + std::to_string(q) + "]", dim_value(t.at(p, q)),
                        std::string(to_string(t.provenance_at(p, q)))});
}

json matrix_value(const linalg::Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> grid_rows(const linalg::Matrix& m) {
    std::vector<std::string> rows;
    std::istringstream in(m.to_string());
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    return rows;
}

// Adds the PD verdict of a scope; returns false when refused.
bool add_pd_check(Report& r, const std::string& name, const Scope& scope, ResidueModel m, bool with_matrices) {
    const std::string key = "PD(" + name + ")";
    try {
        const PdCheck c = pd_check(scope, m);
        std::vector<Field> fields{{key, c.perfect ? "perfect" : "degenerate", {}},
                                  {"rank", std::to_string(c.rank) + "/" + std::to_string(c.size), {}}};
        if (!c.perfect) fields.push_back({"reason", c.reason, {}});
        r.add_record("pd", std::move(fields));
        if (with_matrices) {
            for (const auto& pm : c.matrices) {
                r.add_record("pairings", {{"pairing", pm.left.to_string() + "x" + pm.right.to_string() + "c", {}},
                                          {"rows", pm.matrix.rows(), {}},
                                          {"cols", pm.matrix.cols(), {}},
                                          {"rank", pm.rank, {}},
                                          {"matrix", matrix_value(pm.matrix), {}}});
                r.add_grid(grid_rows(pm.matrix));
            }
        }
        return true;
    } catch (const Refusal& e) {
        r.add_record("pd", {{key, "refused", {}}, {"reason", e.what(), {}}});
        return false;
    }
}

std::string region_text(const RunConfig& c) {
    if (!c.regions.empty() && !c.tokens.empty()) throw std::invalid_argument("give the region either with --region or as trailing words");
    if (c.regions.size() > 1) throw std::invalid_argument("this command takes one region");
    return c.regions.empty() ? joined(c.tokens) : c.regions.front();
}

void add_region_header(Report& r, const AugmentedMetricGraph& g, const RegionSpec& spec, const Region& region) {
    json cuts = json::array();
    for (const auto& p : spec.cuts) cuts.push_back(g.edges()[p.edge].id + ":" + to_string(p.t));
    r.add("seed", spec.seed);
    r.add("cuts", cuts);
    r.add("k", region.boundary_count);
    r.add("strictly_simple", yes_no(region.strictly_simple));
}

}  // namespace

Outcome cmd_hodge(const Skeleton& s, const RunConfig&) {
    const AugmentedMetricGraph& g = s.graph;
    Outcome o;
    Report& r = o.report;
    r.add("model", std::string(to_string(s.model)));
    r.add("betti", betti(g));
    r.add("S_X", dim_value(s_dimension(g, s.model)));
    json ids = json::array();
    for (const auto& id : positive_genus_vertices(g)) ids.push_back(id);
    r.add("G(X)", ids);
    add_table(r, "", hodge_table(g, s.model));
    r.add("finiteness", std::string(to_string(finiteness_verdict(g, s.model))));
    r.add("PD", std::string(to_string(pd_verdict(g, s.model).verdict)));
    return o;
}

Outcome cmd_pd(const Skeleton& s, const RunConfig& c) {
    const AugmentedMetricGraph& g = s.graph;
    Outcome o;
    Report& r = o.report;
    r.add("model", std::string(to_string(s.model)));
    const std::string text = region_text(c);
    if (text.empty()) {
        const PdReport pd = pd_verdict(g, s.model);
        r.add("S_X", dim_value(s_dimension(g, s.model)));
        r.add("PD", std::string(to_string(pd.verdict)));
        r.add("route.s_dimension", std::string(to_string(pd.by_s_dimension)));
        r.add("route.hodge_table", std::string(to_string(pd.by_hodge_table)));
        r.add("reason", pd.reason);
        add_pd_check(r, "X", Scope::whole(Subdivision::create(g)), s.model, true);
        return o;
    }
    const RegionSpec spec = parse_region_spec(g, text);
    const Region region = extract_region(g, spec.seed, spec.cuts);
    add_region_header(r, g, spec, region);
    r.add("local_extra", dim_value(local_extra(region.scope, s.model)));
    add_pd_check(r, "U", region.scope, s.model, true);
    return o;
}

Outcome cmd_green(const Skeleton& s, const RunConfig& c) {
    const AugmentedMetricGraph& g = s.graph;
    std::string text;
    if (c.measure) {
        if (!c.tokens.empty()) throw std::invalid_argument("give the measure either with --measure or as trailing words");
        text = *c.measure;
    } else {
        if (c.tokens.empty() || c.tokens.front() != "measure") throw std::invalid_argument("green needs a measure (--measure or `measure ...`)");
        text = joined(std::vector<std::string>(c.tokens.begin() + 1, c.tokens.end()));
    }
    const MeasureSpec spec = parse_measure_spec(g, text);
    std::vector<SubdivisionPoint> points = support_points(spec);
    NodeAddress base = std::size_t{0};
    if (c.basepoint) {
        base = parse_node_address(g, *c.basepoint);
        if (auto p = std::get_if<SubdivisionPoint>(&base)) points.push_back(*p);
    }
    const auto sub = Subdivision::create(g, points);
    const DiscreteMeasure mu = make_measure(sub, spec);
    const std::size_t b = node_of(*sub, base);
    const PLFunction f = green_solve(mu, b);
    if (!(ddc(f) == mu)) throw ConsistencyError("ddc of the Green solution does not reproduce the measure");

    Outcome o;
    Report& r = o.report;
    r.add("basepoint", sub->nodes()[b].name);
    r.add("mass", rational_value(mu.mass()));
    for (std::size_t n = 0; n < sub->node_count(); ++n) r.add_member("values", {sub->nodes()[n].name, rational_value(f.value(n)), {}});
    return o;
}

Outcome cmd_subset(const Skeleton& s, const RunConfig& c) {
    const AugmentedMetricGraph& g = s.graph;
    const std::string text = region_text(c);
    if (text.empty()) throw std::invalid_argument("subset needs a region (seed=<vertex> cut=<edge>:<t> ...)");
    const RegionSpec spec = parse_region_spec(g, text);
    const Region region = extract_region(g, spec.seed, spec.cuts);
    const SubsetHodge h = subset_hodge(region, s.model);

    Outcome o;
    Report& r = o.report;
    r.add("model", std::string(to_string(s.model)));
    add_region_header(r, g, spec, region);
    r.add("theorem_scope", yes_no(h.in_theorem_scope));
    add_table(r, "full.", h.full);
    add_table(r, "compact.", h.compact);
    add_pd_check(r, "U", region.scope, s.model, false);
    return o;
}

Outcome cmd_mv(const Skeleton& s, const RunConfig& c) {
    const AugmentedMetricGraph& g = s.graph;
    if (c.regions.size() != 3 || !c.tokens.empty())
        throw std::invalid_argument("mv needs exactly three --region options: U, U1, U2");
    const Cover cover = make_cover(g, parse_region_spec(g, c.regions[0]), parse_region_spec(g, c.regions[1]),
                                   parse_region_spec(g, c.regions[2]));
    Outcome o;
    Report& r = o.report;
    r.add("model", std::string(to_string(s.model)));
    for (int p = 0; p < 2; ++p) {
        const MvAudit a = mv_audit(cover, p);
        json dims = json::array(), ranks = json::array();
        for (auto d : a.dims) dims.push_back(d);
        for (auto k : a.ranks) ranks.push_back(k);
        r.add_record("mv", {{"p", p, {}}, {"dims", dims, {}}, {"ranks", ranks, {}}, {"exact", yes_no(a.exact()), {}}});
        if (!a.exact()) o.code = kInconsistent;
    }
    for (std::size_t i = 0; i < 4; ++i) add_pd_check(r, std::string(cover_part_name(i)), cover.part(i), s.model, false);
    for (std::size_t i = 0; i < 4; ++i) {
        const std::string name(cover_part_name(i));
        try {
            const ThreeOfFour t = three_of_four(cover, s.model, i);
            r.add_record("three_of_four", {{"unknown", name, {}},
                                           {"predicted", t.predicted ? std::string(to_string(*t.predicted)) : "undetermined", {}},
                                           {"actual", std::string(to_string(t.actual)), {}},
                                           {"confirmed", t.predicted ? yes_no(t.confirmed) : "n/a", {}}});
            if (t.predicted && !t.confirmed) o.code = kInconsistent;
        } catch (const Refusal& e) {
            r.add_record("three_of_four", {{"unknown", name, {}}, {"predicted", "unavailable", {}}, {"reason", e.what(), {}}});
        } catch (const std::invalid_argument& e) {
            r.add_record("three_of_four", {{"unknown", name, {}}, {"predicted", "unavailable", {}}, {"reason", e.what(), {}}});
        }
    }
    return o;
}

Outcome cmd_audit(const Skeleton& s, const RunConfig&) {
    const AugmentedMetricGraph& g = s.graph;
    Outcome o;
    Report& r = o.report;
    r.add("model", std::string(to_string(s.model)));
    r.add("S_X", dim_value(s_dimension(g, s.model)));
    r.add("aff_h1", dim_value(aff_h1_dim(g, s.model)));
    r.add("finiteness", std::string(to_string(finiteness_verdict(g, s.model))));
    for (const auto& a : sequence_audit(g, s.model)) {
        json terms = json::array();
        for (const auto& d : a.terms) terms.push_back(dim_value(d));
        r.add_record("sequences", {{"sequence", a.id, {}}, {"exact", a.exact_text(), {}}, {"terms", terms, {}}});
        if (a.exact && !*a.exact) o.code = kInconsistent;
    }
    if (s.model == ResidueModel::Torsion) {
        const LiuCheck liu = liu_check(g, s.model);
        r.add("liu", liu.passed ? "pass" : "fail");
        if (!liu.passed) o.code = kInconsistent;
    } else {
        r.add("liu", "n/a");
    }
    return o;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Tropical Dolbeault cohomology and potential theory on curve skeleta", "tdc"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--region", c.regions, "seed=<vertex> cut=<edge>:<t> ...; repeat three times for mv")
        ->allow_extra_args(false)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    app.add_option("--measure", c.measure, "node:weight pairs, e.g. \"v1:1 e2@1/3:-1\"");
    app.add_option("--basepoint", c.basepoint, "vertex id or edge@t (default: first vertex)");

    const std::pair<const char*, const char*> commands[] = {
        {"hodge", "global Hodge table with provenance"},
        {"pd", "Poincare duality verdict and pairing matrices"},
        {"green", "solve ddc f = mu"},
        {"subset", "Hodge tables of a strictly simple region"},
        {"mv", "Mayer-Vietoris audit and 3-of-4 propagation"},
        {"audit", "exact-sequence dimension audits"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", c.input, "skeleton file")->required();
        sub->add_option("words", c.tokens, "region or measure words");
        sub->callback([&c, name = std::string(name)] { c.command = name; });
    }

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        std::ifstream in(c.input);
        if (!in) throw std::invalid_argument("cannot read " + c.input);
        std::stringstream buffer;
        buffer << in.rdbuf();
        const Skeleton skeleton = parse_skeleton(buffer.str());

        Outcome o;
        if (c.command == "hodge") o = cmd_hodge(skeleton, c);
        if (c.command == "pd") o = cmd_pd(skeleton, c);
        if (c.command == "green") o = cmd_green(skeleton, c);
        if (c.command == "subset") o = cmd_subset(skeleton, c);
        if (c.command == "mv") o = cmd_mv(skeleton, c);
        if (c.command == "audit") o = cmd_audit(skeleton, c);

        if (c.format == "json")
            out << o.report.json().dump(2) << '\n';
        else
            out << o.report.text();
        if (o.code == kInconsistent) err << "error: internal consistency check failed\n";
        return o.code;
    } catch (const NoSolution& e) {
        err << "error: " << e.what() << '\n';
        return kNonzeroMass;
    } catch (const NotStrictlySimple& e) {
        err << "error: " << e.what() << '\n';
        return kNotStrictlySimple;
    } catch (const ConsistencyError& e) {
        err << "error: internal consistency failure: " << e.what() << '\n';
        return kInconsistent;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInconsistent;
    }
}

}  // namespace tdc::cli
