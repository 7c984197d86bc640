#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "lecell/bijections.hpp"
#include "lecell/enumeration.hpp"
#include "lecell/io.hpp"
#include "lecell/legame.hpp"
#include "lecell/oracle.hpp"
#include "lecell/patterns.hpp"
#include "lecell/preference.hpp"

using namespace lecell;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Ascii, Json, Csv };

struct Globals {
    std::string format = "ascii";
    std::uint64_t seed = 0;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    Format fmt() const { return format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Ascii; }
};

struct PairArgs {
    std::string type;
    int n = 0;
    int j = 0;
    void add_to(CLI::App* cmd, bool required = true) {
        auto* t = cmd->add_option("--type", type, "A, B, D, E6 or E7");
        auto* n_opt = cmd->add_option("--n", n, "rank");
        auto* j_opt = cmd->add_option("--j", j, "node of the parabolic");
        if (required) {
            t->required();
            n_opt->required();
            j_opt->required();
        }
    }
    std::shared_ptr<const Poset> poset() const { return build_poset(parse_type(type), n, j); }
};

struct DiagramArgs {
    PairArgs pair;
    std::string inline_text;
    std::string input;
    void add_to(CLI::App* cmd) {
        pair.add_to(cmd, false);
        cmd->add_option("--diagram", inline_text, "inline diagram, rows separated by '/'");
        cmd->add_option("--input", input, "diagram JSON file ('-' for stdin)");
    }
    bool given() const { return !inline_text.empty() || !input.empty(); }
    Diagram load() const {
        if (!input.empty()) {
            std::string text;
            if (input == "-") {
                text.assign(std::istreambuf_iterator<char>(std::cin), {});
            } else {
                std::ifstream in(input);
                if (!in) throw DomainError("cannot read " + input);
                text.assign(std::istreambuf_iterator<char>(in), {});
            }
            json doc = json::parse(text, nullptr, false);
            if (doc.is_discarded()) throw DomainError("malformed diagram JSON: parse error in " + input);
            return diagram_from_json(doc);
        }
        if (inline_text.empty()) throw UsageError("a diagram is required (--diagram or --input)");
        if (pair.type.empty() || pair.n == 0 || pair.j == 0)
            throw UsageError("--diagram needs --type, --n and --j");
        return parse_inline_diagram(pair.poset(), inline_text);
    }
};

std::string words(const std::vector<int>& w) {
    std::ostringstream os;
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << w[k];
    return os.str();
}

std::vector<int> parse_word(const std::string& s) {
    std::vector<int> out;
    std::string t = s;
    for (char& c : t)
        if (c == ',') c = ' ';
    std::istringstream is(t);
    std::string tok;
    while (is >> tok) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw DomainError("bad generator '" + tok + "'");
        }
    }
    return out;
}

json box_json(const Poset& p, int i) { return {{"row", p.boxes[i].row}, {"col", p.boxes[i].col}}; }

std::string box_text(const Poset& p, int i) {
    return "(" + std::to_string(p.boxes[i].row) + "," + std::to_string(p.boxes[i].col) + ")";
}

json cell_json(const Poset& p, const CellLabel& c) {
    json j = {{"x", c.x.reduced_word()}, {"w", c.w.reduced_word()}};
    if (p.type == Type::A) {
        j["x_perm"] = to_permutation(c.x);
        j["w_perm"] = to_permutation(c.w);
    } else if (p.type == Type::B) {
        j["x_signed"] = iota_embed(c.x).window;
        j["w_signed"] = iota_embed(c.w).window;
    }
    return j;
}

bool has_decorated(const Poset& p) { return p.type == Type::A || (p.type == Type::B && p.j == p.n); }

DecoratedPermutation to_decorated(const Diagram& d) {
    return d.P().type == Type::A ? phi3(d) : phi3_B(d);
}

// ---- poset

int cmd_poset(const Globals& g, const PairArgs& a) {
    auto p = a.poset();
    switch (g.fmt()) {
        case Format::Json: {
            json j = poset_to_json(*p);
            j["ideals"] = order_ideals(*p).size();
            j["word"] = ideal_to_word(*p, p->full());
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "index,row,col,label\n";
            for (int i = 0; i < p->size(); ++i)
                std::cout << i << "," << p->boxes[i].row << "," << p->boxes[i].col << "," << p->boxes[i].label << "\n";
            break;
        case Format::Ascii: {
            std::cout << "Q^" << p->j << " of " << type_name(p->type) << "_" << p->n << ": " << p->size()
                      << " boxes, " << order_ideals(*p).size() << " order ideals\n";
            for (int r = p->min_row; r <= p->max_row; ++r) {
                std::string line;
                for (int c = p->min_col; c <= p->max_col; ++c) {
                    int i = p->index_at(r, c);
                    std::string cell = i < 0 ? "." : std::to_string(p->boxes[i].label);
                    cell.resize(3, ' ');
                    line += cell;
                }
                while (!line.empty() && line.back() == ' ') line.pop_back();
                std::cout << line << "\n";
            }
            std::cout << "w0^J = " << word_to_string(ideal_to_word(*p, p->full())) << "\n";
        }
    }
    return 0;
}

// ---- cells

int cmd_cells(const Globals& g, const PairArgs& a, bool count_only) {
    auto p = a.poset();
    if (count_only) {
        long long n = 0;
        for (Mask m : order_ideals(*p)) for_each_le_diagram(p, m, [&](const Diagram&) { ++n; });
        if (g.fmt() == Format::Json) std::cout << json{{"pair", PairSpec{p->type, p->n, p->j}.name()}, {"cells", n}}.dump() << "\n";
        else std::cout << n << "\n";
        return 0;
    }
    json out = json::array();
    if (g.fmt() == Format::Csv) std::cout << "x,w,diagram\n";
    for (Mask m : order_ideals(*p)) {
        WeylElement w = ideal_element(*p, m);
        for_each_le_diagram(p, m, [&](const Diagram& d) {
            CellLabel c{value(d), w};
            switch (g.fmt()) {
                case Format::Json: {
                    json j = cell_json(*p, c);
                    j["diagram"] = to_inline(d);
                    out.push_back(j);
                    break;
                }
                case Format::Csv:
                    std::cout << words(c.x.reduced_word()) << "," << words(c.w.reduced_word()) << "," << to_inline(d)
                              << "\n";
                    break;
                case Format::Ascii:
                    std::cout << "x = [" << words(c.x.reduced_word()) << "]  w = [" << words(c.w.reduced_word())
                              << "]  " << to_inline(d) << "\n";
            }
        });
    }
    if (g.fmt() == Format::Json) std::cout << out.dump(2) << "\n";
    return 0;
}

// ---- check

int cmd_check(const Globals& g, const DiagramArgs& a) {
    Diagram d = a.load();
    const bool le = is_pds(d);
    const bool has_pattern = has_pattern_predicate(d.P());
    const bool pattern = has_pattern ? is_le_pattern(d) : le;
    if (g.fmt() == Format::Json) {
        json j = {{"diagram", diagram_to_json(d)}, {"le", le}, {"value", value(d).reduced_word()}};
        j["pattern"] = has_pattern ? json(pattern) : json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_ascii(d);
        std::cout << "le: " << (le ? "yes" : "no") << "\n";
        std::cout << "pattern: " << (has_pattern ? (pattern ? "yes" : "no") : "n/a") << "\n";
        std::cout << "value: " << word_to_string(value(d).reduced_word()) << "\n";
    }
    if (pattern != le) {
        std::cerr << "internal error: pattern predicate and PDS test disagree on " << to_inline(d) << "\n";
        return 1;
    }
    return 0;
}

// ---- leify

int cmd_leify(const Globals& g, const DiagramArgs& a, const std::string& strategy) {
    Diagram d = a.load();
    const Diagram direct = leify_direct(d);
    const Poset& p = d.P();
    const bool has_moves = !complete_families(p).empty();
    GameResult game{direct, {}};
    if (has_moves)
        game = play_le_game(d, strategy == "random" ? Strategy::Random : Strategy::Deterministic, g.seed, true);
    if (!(game.result == direct)) {
        std::cerr << "internal error: Le-game result differs from the direct Le-ification\n";
        return 1;
    }
    if (g.fmt() == Format::Json) {
        json steps = json::array();
        for (const auto& s : game.steps)
            steps.push_back({{"move",
                              {{"family", family_name(s.move.family)},
                               {"x", box_json(p, s.move.x)},
                               {"y", box_json(p, s.move.y)}}},
                             {"diagram", to_inline(s.after)}});
        json j = {{"input", diagram_to_json(d)},
                  {"method", has_moves ? "le-game" : "direct"},
                  {"steps", steps},
                  {"result", diagram_to_json(game.result)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_ascii(d);
        if (!has_moves) std::cout << "no move system for this pair; direct Le-ification\n";
        for (const auto& s : game.steps) {
            std::cout << "\n" << family_name(s.move.family) << " move " << box_text(p, s.move.y) << " -> "
                      << box_text(p, s.move.x) << "\n"
                      << render_ascii(s.after);
        }
        std::cout << "\nresult: " << to_inline(game.result) << " (" << game.steps.size() << " moves)\n";
    }
    return 0;
}

// ---- convert

int cmd_convert(const Globals& g, const DiagramArgs& a, const std::string& cell, const std::string& perm) {
    const int given = int(a.given()) + int(!cell.empty()) + int(!perm.empty());
    if (given != 1) throw UsageError("give exactly one of --diagram/--input, --cell, --perm");
    Diagram d;
    if (a.given()) {
        d = a.load();
        if (!is_pds(d)) throw DomainError("not a Le-diagram: " + to_inline(d));
    } else {
        if (a.pair.type.empty() || a.pair.n == 0 || a.pair.j == 0) throw UsageError("--type, --n and --j are required");
        auto p = a.pair.poset();
        if (!cell.empty()) {
            auto bar = cell.find('|');
            if (bar == std::string::npos) throw DomainError("cell must look like 'x word|w word'");
            CellLabel c{from_word(*p->rs, parse_word(cell.substr(0, bar))), from_word(*p->rs, parse_word(cell.substr(bar + 1)))};
            d = phi2_inverse(p, c);
        } else {
            if (!has_decorated(*p)) throw DomainError("decorated permutations exist for types A and (B_n,n) only");
            auto target = parse_decorated(perm, p->type == Type::B);
            bool found = false;
            for (Mask m : order_ideals(*p)) {
                for_each_le_diagram(p, m, [&](const Diagram& e) {
                    if (!found && to_decorated(e) == target) {
                        d = e;
                        found = true;
                    }
                });
                if (found) break;
            }
            if (!found) throw DomainError("no Le-diagram maps to " + perm);
        }
    }
    const Poset& p = d.P();
    CellLabel c = phi2(d);
    const bool dec = has_decorated(p);
    if (g.fmt() == Format::Json) {
        json j = {{"diagram", diagram_to_json(d)}, {"cell", cell_json(p, c)}};
        j["decorated_permutation"] = dec ? json(to_string(to_decorated(d))) : json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "diagram: " << to_inline(d) << "\n" << render_ascii(d);
        std::cout << "cell: x = [" << words(c.x.reduced_word()) << "]  w = [" << words(c.w.reduced_word()) << "]\n";
        if (p.type == Type::A)
            std::cout << "permutations: (" << words(to_permutation(c.x)) << "), (" << words(to_permutation(c.w)) << ")\n";
        if (dec) std::cout << "decorated permutation: " << to_string(to_decorated(d)) << "\n";
    }
    return 0;
}

// ---- pref

json grid_json(const StairGrid& g) {
    json rows = json::array();
    for (int r = 1; r <= g.n; ++r) {
        std::string s;
        for (int b = g.n; b > r; --b) s += g.at(r, b) == StairGrid::kEmpty ? '.' : g.at(r, b) == 1 ? '+' : '0';
        rows.push_back(s);
    }
    return rows;
}

int cmd_pref(const Globals& g, const std::string& action, const std::string& arg, const DiagramArgs& da,
             bool trace) {
    const bool js = g.fmt() == Format::Json;
    if (action == "alpha") {
        SignedPermutation pi;
        pi.window = parse_word(arg);
        auto f = alpha(pi);
        std::cout << (js ? json(f).dump() : preference_to_string(f)) << "\n";
    } else if (action == "alpha-inv") {
        auto pi = alpha_inverse(parse_preference(arg));
        std::string text;
        for (std::size_t k = 0; k < pi.window.size(); ++k) text += (k ? "," : "") + std::to_string(pi.window[k]);
        std::cout << (js ? json(pi.window).dump() : text) << "\n";
    } else if (action == "to-diagram") {
        auto f = parse_preference(arg);
        std::vector<PsiStep> steps;
        StairGrid grid = psi_grid(f, trace ? &steps : nullptr, {true});
        if (js) {
            json j = {{"preference", f}, {"grid", grid_json(grid)}};
            if (f.size() >= 2) j["diagram"] = diagram_to_json(grid_to_diagram(grid));
            if (trace) {
                json t = json::array();
                for (const auto& s : steps)
                    t.push_back({{"i", s.i}, {"i_star", s.i_star}, {"cases", s.cases}, {"grid", grid_json(s.grid)}});
                j["trace"] = t;
            }
            std::cout << j.dump(2) << "\n";
        } else if (trace) {
            for (std::size_t k = 0; k < steps.size(); ++k) {
                const auto& s = steps[k];
                std::cout << (k ? "\n" : "") << "D_" << s.i << "  (i* = " << s.i_star << ", cases " << s.cases << ")\n"
                          << render_psi_grid(s.grid);
            }
        } else {
            std::cout << render_psi_grid(grid);
        }
    } else if (action == "from-diagram") {
        Diagram d = da.load();
        auto f = phi_D(d);
        std::cout << (js ? json(f).dump() : preference_to_string(f)) << "\n";
    } else {
        throw UsageError("unknown pref action '" + action + "'");
    }
    return 0;
}

// ---- count

int cmd_count(const Globals& g, const PairArgs& a, bool all_shapes, const std::string& grading_name,
              bool formula, bool tableaux) {
    const Type t = a.type.empty() ? Type::B : parse_type(a.type);
    if (tableaux) {
        if (a.n < 1) throw UsageError("--n is required");
        XYPolynomial poly = formula ? T_poly(a.n) : tableau_census(a.n);
        if (g.fmt() == Format::Json) std::cout << json{{"n", a.n}, {"T", poly.to_string()}}.dump() << "\n";
        else if (g.fmt() == Format::Csv) std::cout << "n,T\n" << a.n << "," << poly.to_string() << "\n";
        else std::cout << poly.to_string() << "\n";
        return 0;
    }
    if (a.type.empty() || a.n == 0 || a.j == 0) throw UsageError("--type, --n and --j are required");
    Grading grading = grading_name == "plus" ? Grading::ByPlus : grading_name == "zero" ? Grading::ByZero : Grading::Count;
    QPolynomial poly;
    if (formula) {
        if (grading == Grading::ByZero) throw DomainError("the closed forms are graded by #+");
        if (all_shapes) {
            if (!(t == Type::B && a.j == a.n)) throw DomainError("closed form for all shapes: (B_n,n) only");
            poly = QPolynomial(std::vector<BigInt>{big_B(a.n)});
        } else if (t == Type::B && a.j == 1 && a.n >= 2) {
            poly = bhat_q(a.n);
        } else if (t == Type::D && a.j == 1 && a.n >= 3) {
            poly = dhat_q(a.n);
        } else if (t == Type::B && a.j == a.n) {
            poly = b_staircase_q(a.n);
        } else {
            throw DomainError("no closed form for this pair");
        }
        if (grading == Grading::Count) poly = QPolynomial(std::vector<BigInt>{poly.at_one()});
    } else {
        CensusOptions opts;
        opts.jobs = g.jobs;
        poly = census(t, a.n, a.j, all_shapes ? Scope::AllShapes : Scope::Maximal, grading, opts);
    }
    if (g.fmt() == Format::Json) {
        std::vector<std::string> coeffs;
        for (const auto& c : poly.coeffs()) coeffs.push_back(c.str());
        std::cout << json{{"pair", PairSpec{t, a.n, a.j}.name()}, {"polynomial", poly.to_string()}, {"coefficients", coeffs}}
                         .dump()
                  << "\n";
    } else if (g.fmt() == Format::Csv) {
        std::cout << "degree,coefficient\n";
        for (int k = 0; k <= poly.degree(); ++k) std::cout << k << "," << poly.coeff(k).str() << "\n";
    } else {
        std::cout << poly.to_string() << "\n";
    }
    return 0;
}

// ---- oracle

int cmd_oracle(const Globals& g, const std::vector<std::string>& sweeps, bool all, int max_n) {
    auto want = [&](const std::string& s) { return all || std::find(sweeps.begin(), sweeps.end(), s) != sweeps.end(); };
    if (!all && sweeps.empty()) throw UsageError("choose --all or at least one --sweep");
    for (const auto& s : sweeps)
        if (s != "equivalence" && s != "cells" && s != "game" && s != "moves" && s != "triangles" && s != "preference")
            throw UsageError("unknown sweep '" + s + "'");
    std::vector<SweepReport> reports;
    auto pairs = classical_pairs(max_n, max_n);
    for (const auto& pr : pairs) {
        if (want("equivalence")) reports.push_back(sweep_equivalence(pr, g.jobs));
        if (want("cells")) reports.push_back(sweep_cell_counts(pr));
        if (want("game")) reports.push_back(sweep_le_game(pr, g.seed, g.jobs));
        if (want("moves")) reports.push_back(sweep_moves(pr));
    }
    if (want("triangles")) {
        for (int n = 2; n <= max_n + 1; ++n) reports.push_back(sweep_triangle_A(n));
        for (int n = 1; n <= max_n; ++n) reports.push_back(sweep_triangle_B(n));
    }
    if (want("preference"))
        for (int n = 1; n <= max_n; ++n) reports.push_back(sweep_preference(n));
    bool ok = true;
    json out = json::array();
    for (const auto& r : reports) {
        ok = ok && r.ok;
        if (g.fmt() == Format::Json) {
            out.push_back({{"sweep", r.name}, {"ok", r.ok}, {"checked", r.checked}, {"counterexample", r.counterexample}});
        } else {
            std::cout << (r.ok ? "pass " : "FAIL ") << r.name << " (" << r.checked << " checked)";
            if (!r.ok) std::cout << ": " << r.counterexample;
            std::cout << "\n";
        }
    }
    if (g.fmt() == Format::Json) std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Le-diagrams for cominuscule Grassmannians"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"ascii", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for random strategies")->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);

    PairArgs poset_args;
    auto* poset = app.add_subcommand("poset", "print the poset Q^j");
    poset_args.add_to(poset);

    PairArgs cells_args;
    bool cells_count = false;
    auto* cells = app.add_subcommand("cells", "list or count the cells (Le-diagrams) of all shapes");
    cells_args.add_to(cells);
    cells->add_flag("--count", cells_count, "print only the number of cells");

    DiagramArgs check_args;
    auto* check = app.add_subcommand("check", "PDS test and pattern verdict for a diagram");
    check_args.add_to(check);

    DiagramArgs leify_args;
    std::string strategy = "deterministic";
    auto* leify = app.add_subcommand("leify", "play the Le-game and print the trace");
    leify_args.add_to(leify);
    leify->add_option("--strategy", strategy)->check(CLI::IsMember({"deterministic", "random"}))->capture_default_str();

    DiagramArgs convert_args;
    std::string convert_cell, convert_perm;
    auto* convert = app.add_subcommand("convert", "diagram, cell label and decorated permutation");
    convert_args.add_to(convert);
    convert->add_option("--cell", convert_cell, "reduced words 'x|w', letters separated by spaces or commas");
    convert->add_option("--perm", convert_perm, "decorated permutation, e.g. '~1 3 -2'");

    std::string pref_action, pref_arg;
    bool pref_trace = false;
    DiagramArgs pref_diag;
    auto* pref = app.add_subcommand("pref", "preference functions and maximal (D_n,n) diagrams");
    pref->add_option("action", pref_action, "to-diagram, from-diagram, alpha, alpha-inv")
        ->required()
        ->check(CLI::IsMember({"to-diagram", "from-diagram", "alpha", "alpha-inv"}));
    pref->add_option("value", pref_arg, "preference function or signed permutation, comma separated");
    pref->add_flag("--trace", pref_trace, "print every intermediate grid");
    pref_diag.add_to(pref);

    PairArgs count_args;
    bool count_all = false, count_maximal = false, by_plus = false, by_zero = false, formula = false, tableaux = false;
    auto* count = app.add_subcommand("count", "graded Le-diagram counts");
    count_args.add_to(count, false);
    auto* all_flag = count->add_flag("--all-shapes", count_all, "every order ideal");
    count->add_flag("--maximal", count_maximal, "maximal shape (default)")->excludes(all_flag);
    auto* plus_flag = count->add_flag("--by-plus", by_plus, "grade by number of +");
    count->add_flag("--by-zero", by_zero, "grade by number of 0")->excludes(plus_flag);
    count->add_flag("--formula", formula, "use the recurrence or closed form instead of the census");
    count->add_flag("--tableaux", tableaux, "type B permutation tableaux polynomial T_n(x,y)");

    std::vector<std::string> oracle_sweeps;
    bool oracle_all = false;
    int oracle_max = 4;
    auto* oracle = app.add_subcommand("oracle", "run exhaustive equivalence sweeps");
    oracle->add_flag("--all", oracle_all, "every sweep");
    oracle->add_option("--sweep", oracle_sweeps, "equivalence, cells, game, moves, triangles, preference");
    oracle->add_option("--max-n", oracle_max, "largest rank")->capture_default_str()->check(CLI::Range(1, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*poset) return cmd_poset(g, poset_args);
        if (*cells) return cmd_cells(g, cells_args, cells_count);
        if (*check) return cmd_check(g, check_args);
        if (*leify) return cmd_leify(g, leify_args, strategy);
        if (*convert) return cmd_convert(g, convert_args, convert_cell, convert_perm);
        if (*pref) return cmd_pref(g, pref_action, pref_arg, pref_diag, pref_trace);
        if (*count)
            return cmd_count(g, count_args, count_all, by_plus ? "plus" : by_zero ? "zero" : "count", formula,
                             tableaux);
        if (*oracle) return cmd_oracle(g, oracle_sweeps, oracle_all, oracle_max);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
