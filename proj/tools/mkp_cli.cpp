#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mkp/catalog_io.hpp"
#include "mkp/config_search.hpp"
#include "mkp/enumerate.hpp"
#include "mkp/extract.hpp"
#include "mkp/gadget_template.hpp"
#include "mkp/geometry.hpp"
#include "mkp/planar_map.hpp"
#include "mkp/render.hpp"
#include "mkp/report.hpp"
#include "mkp/yes_drawing.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"min-k-planar drawing toolkit"};
    app.require_subcommand(1);
    int threads = 1;
    unsigned long long seed = 20260808ULL;
    bool as_json = false;
    app.add_option("--threads", threads, "worker threads for enumeration and checks");
    app.add_option("--seed", seed, "seed for randomized generation");
    app.add_flag("--json", as_json, "machine-readable output where applicable");

    auto* cmd_enum = app.add_subcommand("enumerate", "catalog of good drawings of K_n");
    int en_n = 5;
    std::string en_mode = "weak-iso", en_out;
    double en_budget = 3600;
    cmd_enum->add_option("--n", en_n, "complete graph size (3..7)")->required();
    cmd_enum->add_option("--mode", en_mode, "iso or weak-iso");
    cmd_enum->add_option("--out", en_out, "catalog file")->required();
    cmd_enum->add_option("--budget-seconds", en_budget, "abort with an error when exceeded");

    auto* cmd_filter = app.add_subcommand("filter", "min-k filter over a catalog");
    std::string fl_in, fl_out;
    int fl_k = 1;
    cmd_filter->add_option("--in", fl_in)->required();
    cmd_filter->add_option("--k", fl_k)->required();
    cmd_filter->add_option("--out", fl_out)->required();

    auto* cmd_decide = app.add_subcommand("decide", "exact min-k-planarity decision");
    std::string dc_graph, dc_witness;
    int dc_k = 1, dc_max = -1;
    cmd_decide->add_option("--graph", dc_graph)->required();
    cmd_decide->add_option("--k", dc_k);
    cmd_decide->add_option("--max-crossings", dc_max);
    cmd_decide->add_option("--witness-out", dc_witness, "drawing file for yes answers");

    auto* cmd_reduce = app.add_subcommand("reduce", "build the hardness reduction graph");
    std::string rd_inst, rd_out;
    bool rd_strict = false;
    cmd_reduce->add_option("--instance", rd_inst)->required();
    cmd_reduce->add_option("--out", rd_out)->required();
    cmd_reduce->add_flag("--strict", rd_strict, "require T/4 < x_i < T/2 and distinct values");

    auto* cmd_yes = app.add_subcommand("yes-drawing", "drawing for a yes-instance (n <= 2)");
    std::string ys_inst, ys_part, ys_out;
    cmd_yes->add_option("--instance", ys_inst)->required();
    cmd_yes->add_option("--partition", ys_part, "partition file; solved when omitted");
    cmd_yes->add_option("--out", ys_out)->required();

    auto* cmd_extract = app.add_subcommand("extract", "partition from a drawing");
    std::string ex_art, ex_drawing;
    cmd_extract->add_option("--artifact", ex_art)->required();
    cmd_extract->add_option("--drawing", ex_drawing)->required();

    auto* cmd_gadget = app.add_subcommand("gadget", "one uncrossable edge with its template");
    std::string gd_u = "u", gd_v = "v", gd_out;
    cmd_gadget->add_option("--u", gd_u);
    cmd_gadget->add_option("--v", gd_v);
    cmd_gadget->add_option("--out", gd_out)->required();

    auto* cmd_solve = app.add_subcommand("solve3p", "exhaustive 3-partition solver");
    std::string sp_inst, sp_out;
    bool sp_strict = false;
    cmd_solve->add_option("--instance", sp_inst)->required();
    cmd_solve->add_option("--out", sp_out);
    cmd_solve->add_flag("--strict", sp_strict);

    auto* cmd_check = app.add_subcommand("check-drawing", "validate a drawing file");
    std::string ck_in;
    int ck_k = 1;
    cmd_check->add_option("--in", ck_in)->required();
    cmd_check->add_option("--k", ck_k);

    auto* cmd_render = app.add_subcommand("render", "schematic SVG of a drawing");
    std::string rn_in, rn_out;
    int rn_outer = -1;
    cmd_render->add_option("--in", rn_in)->required();
    cmd_render->add_option("--out", rn_out)->required();
    cmd_render->add_option("--outer-face", rn_outer, "face index; largest face when omitted");

    auto* cmd_checks = app.add_subcommand("paper-checks", "run every computer-checkable claim");
    double pc_budget = 3600;
    std::string pc_out;
    cmd_checks->add_option("--budget-seconds", pc_budget, "0 skips everything");
    cmd_checks->add_option("--out", pc_out, "also write the JSON report here");

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();
    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_enum) {
            mkp::EnumLimits lim;
            lim.max_seconds = en_budget;
            auto cat = mkp::enumerate_good_drawings(en_n, en_mode, lim, threads);
            spit(en_out, mkp::catalog_to_json(cat));
            std::cout << cat.count() << " classes\n";
        } else if (*cmd_filter) {
            auto cat = mkp::catalog_from_json(slurp(fl_in));
            auto out = mkp::filter_min_k(cat, fl_k);
            spit(fl_out, mkp::catalog_to_json(out));
            std::cout << out.count() << " classes\n";
        } else if (*cmd_decide) {
            mkp::Graph g = mkp::graph_from_json(slurp(dc_graph));
            int maxc = dc_max >= 0 ? dc_max : g.num_edges();
            auto res = mkp::exact_min_k_decide(g, dc_k, maxc);
            switch (res.status) {
                case mkp::DecideResult::Status::Yes:
                    std::cout << "yes (" << res.witness->crossings.size() << " crossings)\n";
                    if (!dc_witness.empty()) spit(dc_witness, mkp::drawing_to_json(*res.witness));
                    break;
                case mkp::DecideResult::Status::No:
                    std::cout << "no\n";
                    break;
                case mkp::DecideResult::Status::BudgetExceeded:
                    std::cout << "budget exceeded\n";
                    return 2;
            }
        } else if (*cmd_reduce) {
            auto inst = mkp::instance_from_json(slurp(rd_inst));
            auto val = mkp::validate_three_partition(inst);
            if (!val.valid(rd_strict)) {
                std::cerr << "instance rejected:";
                for (auto& n : val.notes) std::cerr << " " << n;
                std::cerr << "\n";
                return 1;
            }
            auto art = mkp::build_reduction(inst);
            spit(rd_out, mkp::artifact_to_json(art));
            std::cout << art.graph.num_vertices() << " vertices, " << art.graph.num_edges()
                      << " edges, " << art.gadgets.size() << " gadgets\n";
        } else if (*cmd_yes) {
            auto inst = mkp::instance_from_json(slurp(ys_inst));
            auto art = mkp::build_reduction(inst);
            std::optional<mkp::Partition> p;
            if (!ys_part.empty()) p = mkp::partition_from_json(slurp(ys_part));
            else p = mkp::solve_three_partition(inst);
            if (!p) {
                std::cerr << "no partition exists\n";
                return 1;
            }
            auto d = mkp::build_yes_drawing(art, *p);
            spit(ys_out, mkp::drawing_to_json(d));
            std::cout << d.crossings.size() << " crossings, min-1-planar="
                      << mkp::is_min_k_planar(d, 1) << "\n";
        } else if (*cmd_extract) {
            auto art = mkp::artifact_from_json(slurp(ex_art));
            auto d = mkp::drawing_from_json(slurp(ex_drawing));
            auto p = mkp::extract_partition(art, d);
            std::cout << mkp::partition_to_json(p) << "\n";
        } else if (*cmd_gadget) {
            mkp::Graph g;
            g.add_vertex(gd_u);
            g.add_vertex(gd_v);
            auto h = mkp::attach_uncrossable_edge(g, 0, 1);
            auto res = mkp::gadget_template_drawing(h, g);
            spit(gd_out, mkp::drawing_to_json(res.drawing));
            std::cout << g.num_vertices() << " vertices, " << g.num_edges() << " edges, template "
                      << res.drawing.crossings.size() << " crossings\n";
        } else if (*cmd_solve) {
            auto inst = mkp::instance_from_json(slurp(sp_inst));
            auto val = mkp::validate_three_partition(inst);
            std::cout << "target T=" << (val.target_integer ? std::to_string(val.target) : "none")
                      << " valid=" << val.valid(sp_strict) << "\n";
            auto p = mkp::solve_three_partition(inst);
            if (!p) {
                std::cout << "no\n";
                return 1;
            }
            std::cout << "yes\n";
            if (!sp_out.empty()) spit(sp_out, mkp::partition_to_json(*p));
            else std::cout << mkp::partition_to_json(*p) << "\n";
        } else if (*cmd_check) {
            auto d = mkp::drawing_from_json(slurp(ck_in));
            auto rep = mkp::validate_drawing(d);
            for (auto& v : rep.violations) std::cout << "violation: " << v << "\n";
            std::cout << "valid=" << rep.valid();
            if (rep.valid())
                std::cout << " simple=" << mkp::is_simple(d) << " min-" << ck_k
                          << "-planar=" << mkp::is_min_k_planar(d, ck_k) << " k-planar(" << ck_k
                          << ")=" << mkp::is_k_planar(d, ck_k)
                          << " crossings=" << d.crossings.size();
            std::cout << "\n";
            return rep.valid() ? 0 : 1;
        } else if (*cmd_render) {
            auto d = mkp::drawing_from_json(slurp(rn_in));
            mkp::RenderSpec spec;
            if (rn_outer >= 0) spec.outer_face = rn_outer;
            spit(rn_out, mkp::render_svg(d, spec));
            std::cout << "wrote " << rn_out << "\n";
        } else if (*cmd_checks) {
            mkp::CheckBudget budget;
            budget.max_seconds = pc_budget;
            budget.threads = threads;
            budget.seed = seed;
            auto rep = mkp::run_paper_checks(budget);
            if (as_json) std::cout << rep.to_json() << "\n";
            else std::cout << rep.to_text();
            if (!pc_out.empty()) spit(pc_out, rep.to_json());
            return rep.exit_code();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
