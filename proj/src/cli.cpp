#include "tropmod/cli.hpp"

#include "tropmod/contraction.hpp"
#include "tropmod/error.hpp"
#include "tropmod/graph_format.hpp"
#include "tropmod/homology.hpp"
#include "tropmod/strata.hpp"
#include "tropmod/torus.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace tropmod {

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = " ")
{
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? sep : "") << v[i];
    return out.str();
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream in(text);
    for (std::string tok; std::getline(in, tok, ',');) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size())
            throw Error(ErrorCode::ParseError, "expected a comma-separated list of integers, got '" + text + "'");
        out.push_back(value);
    }
    return out;
}

Ring parse_ring(const std::string& s)
{
    if (s == "z2")
        return Ring::Z2;
    if (s == "z" || s == "int")
        return Ring::Z;
    throw Error(ErrorCode::ParseError, "unknown ring '" + s + "'");
}

Space parse_space(const std::string& s)
{
    if (s == "torus")
        return Space::Torus;
    if (s == "xq")
        return Space::Quotient;
    throw Error(ErrorCode::ParseError, "unknown space '" + s + "'");
}

// Prefixes file errors with the path so that messages read `path: line N: ...`.
template <class F>
auto with_path(const std::string& path, F&& load)
{
    try {
        return load(path);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + std::string(e.what()).substr(error_code_name(e.code()).size() + 2));
    }
}

MetricMarkedGraph load_graph(const std::string& path)
{
    return with_path(path, [](const std::string& p) { return load_metric_graph(p); });
}

StratumIndex load_stratum_file(const std::string& path)
{
    return with_path(path, [](const std::string& p) { return load_stratum(p); });
}

std::string chain_string(const Chain& chain)
{
    if (chain.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto& [cell, coeff] = chain[i];
        if (i)
            out += coeff < 0 ? " - " : " + ";
        else if (coeff < 0)
            out += "-";
        const std::int64_t mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1)
            out += std::to_string(mag) + "*";
        out += "(" + cell.to_string() + ")";
    }
    return out;
}

std::string groups_string(const std::vector<HomologyGroup>& groups)
{
    std::vector<std::string> parts;
    for (const auto& g : groups)
        parts.push_back(g.to_string());
    return join(parts);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Metric graphs, moduli strata and the cubical model of T^m/Z2", "tropmod"};
    app.require_subcommand(1);
    std::function<void()> action;

    // graph ------------------------------------------------------------------------------
    auto* graph = app.add_subcommand("graph", "Metric marked graph operations");
    graph->require_subcommand(1);
    std::string file_a, file_b, edges_arg, t_arg, eps_arg, variant_arg = "tm", d_arg;
    std::optional<std::uint32_t> vertex_arg;

    auto* g_genus = graph->add_subcommand("genus", "First Betti number");
    g_genus->add_option("FILE", file_a)->required();
    g_genus->callback([&] { action = [&] { out << genus(load_graph(file_a).graph()) << '\n'; }; });

    auto* g_bridges = graph->add_subcommand("bridges", "Edge ids of all bridges");
    g_bridges->add_option("FILE", file_a)->required();
    g_bridges->callback([&] {
        action = [&] {
            const auto g = load_graph(file_a);
            const auto labels = edge_labels(g.graph());
            std::vector<std::uint32_t> ids;
            for (DartId d : bridges(g.graph()))
                ids.push_back(labels.at(d));
            std::sort(ids.begin(), ids.end());
            out << join(ids) << '\n';
        };
    });

    auto* g_components = graph->add_subcommand("components", "Connected components, one per line");
    g_components->add_option("FILE", file_a)->required();
    g_components->callback([&] {
        action = [&] {
            for (const auto& block : connected_components(load_graph(file_a).graph()))
                out << join(block) << '\n';
        };
    });

    auto* g_valency = graph->add_subcommand("valency", "Vertex valencies (loops count twice)");
    g_valency->add_option("FILE", file_a)->required();
    g_valency->add_option("--vertex", vertex_arg, "Report a single vertex");
    g_valency->callback([&] {
        action = [&] {
            const auto g = load_graph(file_a);
            if (vertex_arg) {
                out << valency(g.graph(), *vertex_arg) << '\n';
                return;
            }
            for (VertexId v : g.graph().vertices())
                out << v << ' ' << valency(g.graph(), v) << '\n';
        };
    });

    auto* g_shrink = graph->add_subcommand("shrink", "Contract a forest of edges");
    g_shrink->add_option("FILE", file_a)->required();
    g_shrink->add_option("--edges", edges_arg, "Comma-separated edge ids")->required();
    g_shrink->callback([&] {
        action = [&] {
            const auto g = load_graph(file_a);
            std::map<std::uint32_t, DartId> by_label;
            for (auto [dart, label] : edge_labels(g.graph()))
                by_label[label] = dart;
            std::vector<DartId> darts;
            for (int id : parse_int_list(edges_arg)) {
                auto it = id < 0 ? by_label.end() : by_label.find(static_cast<std::uint32_t>(id));
                if (it == by_label.end())
                    throw Error(ErrorCode::UnknownEdge, "no edge with id " + std::to_string(id));
                darts.push_back(it->second);
            }
            out << format_metric_graph(shrink_forest(g, darts));
        };
    });

    auto* g_retract = graph->add_subcommand("retract", "Scale bridges by t (t = 0 contracts them)");
    g_retract->add_option("FILE", file_a)->required();
    g_retract->add_option("--t", t_arg, "Parameter p/q in [0,1]")->required();
    g_retract->callback([&] { action = [&] { out << format_metric_graph(retract(load_graph(file_a), parse_rational(t_arg))); }; });

    auto* g_iso = graph->add_subcommand("isometric", "Mark-preserving isometry test");
    g_iso->add_option("FILE_A", file_a)->required();
    g_iso->add_option("FILE_B", file_b)->required();
    g_iso->callback([&] { action = [&] { out << (is_isometric(load_graph(file_a), load_graph(file_b)) ? "true" : "false") << '\n'; }; });

    auto* g_nbhd = graph->add_subcommand("neighborhood", "Whether FILE_H lies in the eps-neighbourhood of FILE_G");
    g_nbhd->add_option("FILE_G", file_a)->required();
    g_nbhd->add_option("FILE_H", file_b)->required();
    g_nbhd->add_option("--eps", eps_arg, "Radius p/q")->required();
    g_nbhd->callback([&] {
        action = [&] {
            const auto g = load_graph(file_a);
            const auto h = load_graph(file_b);
            out << (in_neighborhood(h, g, parse_rational(eps_arg)) ? "true" : "false") << '\n';
        };
    });

    auto* g_tm = graph->add_subcommand("tm", "Membership in TM, its bridge-free part, or the leaf model");
    g_tm->add_option("FILE", file_a)->required();
    g_tm->add_option("--variant", variant_arg, "tm | tmb | tmd")->check(CLI::IsMember({"tm", "tmb", "tmd"}));
    g_tm->add_option("--d", d_arg, "Leaf length p/q (tmd)");
    g_tm->callback([&] {
        action = [&] {
            const TmVariant v = variant_arg == "tm" ? TmVariant::TM : variant_arg == "tmb" ? TmVariant::TMb : TmVariant::TMd;
            if (v == TmVariant::TMd && d_arg.empty())
                throw Error(ErrorCode::BadParameter, "--d is required for --variant tmd");
            const Rational d = d_arg.empty() ? Rational(0) : parse_rational(d_arg);
            out << (tm_membership(load_graph(file_a), v, d) ? "true" : "false") << '\n';
        };
    });

    auto* g_cdata = graph->add_subcommand("component-data", "Genus and marks of every component");
    g_cdata->add_option("FILE", file_a)->required();
    g_cdata->callback([&] {
        action = [&] {
            for (const auto& [g, labels] : component_data(load_graph(file_a)))
                out << g << " {" << join(labels, ",") << "}\n";
        };
    });

    // strata -----------------------------------------------------------------------------
    auto* strata = app.add_subcommand("strata", "Standard strata of the moduli space");
    strata->require_subcommand(1);
    bool closure = false;

    auto* s_dim = strata->add_subcommand("dim", "Dimension of a stratum");
    s_dim->add_option("FILE", file_a)->required();
    s_dim->callback([&] { action = [&] { out << stratum_dimension(load_stratum_file(file_a)) << '\n'; }; });

    auto* s_bnd = strata->add_subcommand("boundary", "Boundary strata, one step or full closure");
    s_bnd->add_option("FILE", file_a)->required();
    s_bnd->add_flag("--closure", closure, "All strata reachable by repeated moves");
    s_bnd->callback([&] {
        action = [&] {
            const auto found = boundary_strata(load_stratum_file(file_a), closure ? BoundaryMode::Closure : BoundaryMode::OneStep);
            out << found.size() << '\n';
            for (std::size_t i = 0; i < found.size(); ++i)
                out << "# dim " << stratum_dimension(found[i]) << '\n' << format_stratum(found[i], "b" + std::to_string(i + 1));
        };
    });

    // xq ---------------------------------------------------------------------------------
    auto* xq = app.add_subcommand("xq", "Cubical model of the torus and its quotient X_{m+1}");
    xq->require_subcommand(1);
    int m_arg = 0;
    std::size_t cap = 0;
    std::string space_arg = "xq", ring_arg = "z2", coeff_arg = "z2", vertex_str, subset_arg, out_path, in_path;

    auto add_cap = [&](CLI::App* sub, const char* name) {
        sub->add_option(name, cap, "Override the resource cap on m (defaults: 12 over Z2, 8 over Z)");
    };

    auto* x_cells = xq->add_subcommand("cells", "Cell counts per dimension");
    x_cells->add_option("--m", m_arg)->required();
    x_cells->add_option("--space", space_arg, "torus | xq")->check(CLI::IsMember({"torus", "xq"}));
    x_cells->callback([&] {
        action = [&] {
            std::vector<std::size_t> counts;
            const Space sp = parse_space(space_arg);
            for (int d = 0; d <= m_arg; ++d)
                counts.push_back(sp == Space::Torus ? torus_cells(m_arg, d).size() : quotient_cells(m_arg, d).size());
            out << join(counts) << '\n';
        };
    });

    auto* x_betti = xq->add_subcommand("betti", "Unreduced homology (Z2 Betti numbers or integral groups)");
    x_betti->add_option("--m", m_arg)->required();
    x_betti->add_option("--coeff", coeff_arg, "z2 | int")->check(CLI::IsMember({"z2", "int", "z"}));
    x_betti->add_option("--space", space_arg, "torus | xq")->check(CLI::IsMember({"torus", "xq"}));
    add_cap(x_betti, "--max-m");
    x_betti->callback([&] {
        action = [&] {
            const Ring ring = parse_ring(coeff_arg);
            const auto c = build_chain_complex(m_arg, parse_space(space_arg), ring, cap);
            const auto h = homology(c.data, ring);
            out << (ring == Ring::Z2 ? join(h.betti) : groups_string(h.groups)) << '\n';
        };
    });

    int range_m = 0;
    auto* x_formula = xq->add_subcommand("check-formula", "Compare rank-computed Betti numbers with the closed formula");
    x_formula->add_option("--max-m", range_m)->required();
    add_cap(x_formula, "--cap");
    x_formula->callback([&] {
        action = [&] {
            const auto r = check_formula(range_m, cap);
            for (const auto& line : r.lines)
                out << line << '\n';
            out << (r.ok ? "ok" : "FAIL") << '\n';
        };
    });

    auto* x_rec = xq->add_subcommand("check-recursion", "Verify the Betti recursion with rank-computed values");
    x_rec->add_option("--max-m", range_m)->required();
    add_cap(x_rec, "--cap");
    x_rec->callback([&] {
        action = [&] {
            const auto r = check_recursion(range_m, cap);
            for (const auto& line : r.lines)
                out << line << '\n';
            out << (r.ok ? "ok" : "FAIL") << '\n';
        };
    });

    auto* x_link = xq->add_subcommand("link", "f-vector and Z2 Betti numbers of a vertex link");
    x_link->add_option("--m", m_arg)->required();
    x_link->add_option("--vertex", vertex_str, "Vertex tuple, e.g. +,-,+")->required()->allow_extra_args(false);
    x_link->callback([&] {
        action = [&] {
            const auto link = vertex_link(m_arg, parse_cell(vertex_str));
            out << join(link.f_vector()) << '\n' << join(homology(link, Ring::Z2).betti) << '\n';
        };
    });

    auto* x_sigma = xq->add_subcommand("sigma", "The cycle sigma_S, its boundary and its image in the quotient");
    x_sigma->add_option("--m", m_arg)->required();
    x_sigma->add_option("--subset", subset_arg, "Comma-separated 1-based positions")->required();
    x_sigma->callback([&] {
        action = [&] {
            const Chain s = sigma_cycle(m_arg, parse_int_list(subset_arg));
            out << "sigma " << chain_string(s) << '\n';
            out << "boundary " << chain_string(boundary(s, Space::Torus, Ring::Z2)) << '\n';
            out << "q " << chain_string(chain_map_q(s, Ring::Z2)) << '\n';
        };
    });

    auto* x_export = xq->add_subcommand("export", "Write the chain complex in text form");
    x_export->add_option("--m", m_arg)->required();
    x_export->add_option("--space", space_arg, "torus | xq")->check(CLI::IsMember({"torus", "xq"}));
    x_export->add_option("--ring", ring_arg, "z2 | z")->check(CLI::IsMember({"z2", "z"}));
    x_export->add_option("--out", out_path, "Output path, '-' for stdout")->required();
    add_cap(x_export, "--max-m");
    x_export->callback([&] {
        action = [&] {
            const std::string text = format_chain_complex(build_chain_complex(m_arg, parse_space(space_arg), parse_ring(ring_arg), cap));
            if (out_path == "-") {
                out << text;
                return;
            }
            std::ofstream file(out_path, std::ios::binary);
            file << text;
            if (!file)
                throw Error(ErrorCode::BadParameter, "cannot write " + out_path);
        };
    });

    auto* x_hom = xq->add_subcommand("homology", "Homology of an exported chain complex");
    x_hom->add_option("--in", in_path)->required();
    x_hom->add_option("--coeff", coeff_arg, "z2 | int")->check(CLI::IsMember({"z2", "int", "z"}));
    x_hom->callback([&] {
        action = [&] {
            const auto parsed = with_path(in_path, [](const std::string& p) { return parse_chain_complex(read_text_file(p)); });
            const Ring ring = parse_ring(coeff_arg);
            const auto h = homology(parsed.data, ring);
            out << (ring == Ring::Z2 ? join(h.betti) : groups_string(h.groups)) << '\n';
        };
    });

    auto* x_conj = xq->add_subcommand("conjecture", "Integral homology against the conjectured Z2/Z pattern");
    x_conj->add_option("--m", m_arg)->required();
    add_cap(x_conj, "--max-m");
    x_conj->callback([&] {
        action = [&] {
            const auto r = conjecture_report(m_arg, cap);
            out << "reduced z2 " << join(r.z2_reduced) << '\n';
            out << "reduced z " << groups_string(r.integral_reduced) << '\n';
            out << "uct " << (r.uct_consistent ? "consistent" : "INCONSISTENT") << '\n';
            out << "pattern " << (r.pattern_holds ? "holds" : "fails") << '\n';
            for (const auto& line : r.mismatches)
                out << "mismatch " << line << '\n';
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::ResourceLimit ? 2 : 1;
    }

    try {
        if (action)
            action();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::ResourceLimit ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace tropmod
