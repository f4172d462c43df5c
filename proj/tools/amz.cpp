#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <amz/format.hpp>
#include <amz/verify.hpp>

namespace
{

using amz::Json;

struct Options {
    std::string input;
    std::string format = "json";
    std::string method = "chain";
    std::string suite = "paper";
    std::vector<int> w;
    std::vector<int> orders;
    int D = 5;
    int n = 2;
    int alpha = 1;
    std::int64_t p = 0;
    unsigned threads = 1;
};

amz::Json load(const std::string &path)
{
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return amz::parse_json_text(ss.str());
    }
    return amz::read_json_file(path);
}

amz::Arrangement load_arrangement(const std::string &path) { return amz::arrangement_from_json(load(path)); }

amz::Quiver load_quiver(const std::string &path) { return amz::quiver_from_json(load(path)); }

amz::Style style(const Options &o) { return o.format == "latex" ? amz::Style::latex : amz::Style::plain; }

void emit(const Json &j) { std::cout << j.dump(2) << "\n"; }

// Text formats print a single rendered value; JSON prints the full object.
void emit(const Options &o, const Json &j, const std::string &text)
{
    if (o.format == "json") {
        emit(j);
    } else {
        std::cout << text << "\n";
    }
}

Json flats_json(const amz::FlatLattice &lat)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
        Json members = Json::array();
        for (int k : amz::set_members(lat.flat(i))) {
            members.push_back(k + 1);
        }
        out.push_back(Json{{"index", i}, {"hyperplanes", members}, {"rank", lat.rank(i)}, {"delta", lat.delta(i)}});
    }
    return out;
}

Json flags_json(const amz::StructuralFlags &f)
{
    return Json{{"essential", f.essential},
                {"coloop_free", f.coloop_free},
                {"unimodular", f.unimodular},
                {"max_abs_minor", f.max_abs_minor.get_str()}};
}

Json rational_json(const amz::Rational &x) { return x.get_str(); }

int cmd_lattice(const Options &o)
{
    auto A = load_arrangement(o.input);
    amz::FlatLattice lat(A);
    emit(Json{{"flats", flats_json(lat)}, {"flags", flags_json(amz::structural_flags(A))}});
    return 0;
}

int cmd_chi(const Options &o)
{
    auto A = load_arrangement(o.input);
    amz::FlatLattice lat(A);
    auto chi = lat.char_poly('q');
    Json j{{"chi", amz::to_json(chi)}};
    if (o.p > 0) {
        j["complement_count"] = amz::count_complement_Fq(A, o.p).get_str();
        j["chi_at_p"] = rational_json(chi.eval(amz::Rational(o.p)));
    }
    emit(o, j, amz::format_poly(chi, style(o)));
    return 0;
}

int cmd_mobius(const Options &o)
{
    auto A = load_arrangement(o.input);
    amz::FlatLattice lat(A);
    Json vals = Json::array();
    for (std::size_t f = 0; f < lat.size(); ++f) {
        for (std::size_t g = f; g < lat.size(); ++g) {
            if (lat.leq(f, g)) {
                vals.push_back(Json::array({f, g, lat.mobius(f, g).get_str()}));
            }
        }
    }
    emit(Json{{"flats", flats_json(lat)}, {"mobius", vals}});
    return 0;
}

int cmd_hypertoric(const Options &o)
{
    auto A = load_arrangement(o.input);
    amz::FlatLattice lat(A);
    auto h = amz::hypertoric_class(A, lat);
    Json j{{"class", amz::to_json(h.cls)}, {"unimodular", h.unimodular}, {"formal", h.formal}};
    if (h.cls.is_polynomial()) {
        j["e_polynomial"] = amz::to_json(amz::e_polynomial(h.cls));
    }
    if (o.p > 0) {
        auto xi = amz::find_generic_xi(A, lat, o.p);
        if (!xi) {
            throw amz::precondition_error("no generic xi exists mod " + std::to_string(o.p));
        }
        auto count = amz::count_moment_fiber(A, lat, o.p, *xi);
        amz::Rational expect = h.cls.eval(amz::Rational(o.p)) *
                               amz::rational_pow(amz::Rational(o.p - 1), static_cast<long>(A.m()));
        j["fiber"] = Json{{"p", o.p}, {"xi", *xi}, {"count", count.get_str()}, {"matches_class", amz::Rational(count) == expect}};
    }
    emit(o, j, amz::format_poly(h.cls, style(o)));
    return 0;
}

int cmd_nakajima(const Options &o)
{
    auto g = load_quiver(o.input);
    std::vector<int> w = o.w.empty() ? std::vector<int>(static_cast<std::size_t>(g.vertices), 1) : o.w;
    auto gf = amz::nakajima_gf(g, w, o.D);
    Json cls = Json::array();
    std::string text;
    for (const auto &[v, c] : gf.classes) {
        cls.push_back(Json{{"v", v}, {"class", amz::to_json(c)}});
        std::string vs;
        for (int x : v) {
            vs += (vs.empty() ? "" : ",") + std::to_string(x);
        }
        text += "[" + vs + "] " + amz::format_poly(c, style(o)) + "\n";
    }
    if (!text.empty()) {
        text.pop_back();
    }
    emit(o, Json{{"w", w}, {"D", o.D}, {"classes", cls}}, text);
    return 0;
}

int cmd_odr(const Options &o)
{
    amz::OdrInput in;
    in.n = o.n;
    in.orders = o.orders;
    auto cls = amz::odr_class(in);
    emit(o, Json{{"n", in.n}, {"orders", in.orders}, {"class", amz::to_json(cls)}, {"dimension", amz::odr_dimension(in)}},
         amz::format_poly(cls, style(o)));
    return 0;
}

int cmd_igusa(const Options &o)
{
    auto A = load_arrangement(o.input);
    amz::BiRational z;
    if (o.method == "recursion") {
        z = amz::igusa_recursion(A);
    } else {
        z = amz::igusa_chain(A, amz::FlatLattice(A));
    }
    emit(o, Json{{"zeta", amz::to_json(z)}, {"functional_equation", amz::functional_equation_check(z)}},
         amz::format_zeta(z, style(o)));
    return 0;
}

int cmd_poles(const Options &o)
{
    auto A = load_arrangement(o.input);
    amz::FlatLattice lat(A);
    auto rep = amz::pole_report(amz::igusa_chain(A, lat), A, lat);
    Json poles = Json::array();
    auto sets = [](const std::vector<amz::IndexSet> &v) {
        Json out = Json::array();
        for (auto s : v) {
            Json m = Json::array();
            for (int k : amz::set_members(s)) {
                m.push_back(k + 1);
            }
            out.push_back(m);
        }
        return out;
    };
    for (const auto &p : rep.poles) {
        poles.push_back(Json{{"epsilon", p.epsilon},
                             {"chain_length", p.chain_length},
                             {"predicted_order", p.predicted_order},
                             {"actual_order", p.actual_order},
                             {"criterion", p.criterion.get_str()},
                             {"minimal", sets(p.minimal)},
                             {"tops", sets(p.tops)},
                             {"distinguished", p.distinguished()}});
    }
    emit(Json{{"poles", poles}, {"notes", rep.notes}});
    return 0;
}

int cmd_bmu(const Options &o)
{
    auto A = load_arrangement(o.input);
    amz::FlatLattice lat(A);
    auto b = amz::b_mu(A, lat);
    bool agrees = b == amz::b_mu_via_residue(amz::igusa_chain(A, lat), static_cast<int>(A.m()));
    if (!agrees) {
        throw amz::invariant_error("B_mu from the lattice differs from the residue of the zeta function");
    }
    emit(o, Json{{"B_mu", amz::to_json(b)}, {"residue_agrees", agrees}}, amz::format_rational(b, style(o)));
    return 0;
}

int cmd_bprime(const Options &o)
{
    auto j = load(o.input);
    auto A = amz::is_quiver_json(j) ? amz::graphic_arrangement(amz::quiver_from_json(j)) : amz::arrangement_from_json(j);
    amz::FlatLattice lat(A);
    auto d = amz::b_prime(A, lat);
    if (!d.positive_coeffs) {
        std::cerr << "conjecture counterexample: B' has a non-positive coefficient\n";
    }
    Json poly = amz::to_json(d.B_prime)["coeffs"];
    emit(o,
         Json{{"poly", poly},
              {"palindromic", d.palindromic},
              {"degree", d.degree},
              {"formula_degree", d.formula_degree},
              {"positive", d.positive_coeffs},
              {"B_mu", amz::to_json(d.B_mu)}},
         amz::format_poly(d.B_prime, style(o)));
    return 0;
}

int cmd_quiver_indec(const Options &o)
{
    auto g = load_quiver(o.input);
    auto a = amz::a_gamma_alpha(g, o.alpha);
    Json j{{"alpha", o.alpha}, {"poly", amz::to_json(a)}, {"degree", a.degree()}};
    if (o.p > 0) {
        if (!amz::is_prime(o.p)) {
            throw amz::precondition_error(std::to_string(o.p) + " is not prime");
        }
        auto bf = amz::brute_force_indec(g, o.p, o.alpha);
        auto at = a.eval(amz::Rational(o.p));
        j["p"] = o.p;
        j["value"] = rational_json(at);
        j["brute_force"] = bf.get_str();
        j["match"] = amz::Rational(bf) == at;
    }
    emit(o, j, amz::format_poly(a, style(o)));
    return 0;
}

int cmd_quiver_limit(const Options &o)
{
    auto l = amz::a_gamma_limit(load_quiver(o.input));
    emit(o, Json{{"limit", amz::to_json(l)}}, amz::format_rational(l, style(o)));
    return 0;
}

int cmd_check_lastone(const Options &o)
{
    auto r = amz::check_lastone(load_quiver(o.input));
    if (!r.equal) {
        std::cerr << "conjecture violated: both sides differ\n";
    }
    emit(Json{{"lhs", amz::to_json(r.lhs)}, {"rhs", amz::to_json(r.rhs)}, {"equal", r.equal}});
    return 0;
}

int cmd_oracle(const Options &o)
{
    auto A = load_arrangement(o.input);
    amz::FlatLattice lat(A);
    std::int64_t p = o.p > 0 ? o.p : 5;
    auto c = amz::count_solutions_mod(A, p, o.alpha);
    Json j{{"p", p}, {"alpha", o.alpha}, {"count", c.count.get_str()}, {"normalized", rational_json(c.normalized)}};
    auto flags = amz::structural_flags(A);
    if (flags.essential) {
        Json rows = Json::array();
        bool ok = true;
        for (const auto &r : amz::poincare_check(A, amz::igusa_chain(A, lat), p, o.alpha)) {
            std::cerr << "poincare depth " << r.alpha << (r.match ? " ok" : " MISMATCH") << "\n";
            rows.push_back(Json{{"alpha", r.alpha},
                                {"from_zeta", rational_json(r.from_zeta)},
                                {"from_count", rational_json(r.from_count)},
                                {"match", r.match}});
            ok = ok && r.match;
        }
        j["poincare"] = rows;
        auto probe = amz::limit_probe(A, lat, p, o.alpha);
        Json seq = Json::array();
        for (const auto &x : probe.sequence) {
            seq.push_back(rational_json(x));
        }
        Json lp{{"sequence", seq}, {"coloop_free", probe.coloop_free}, {"increasing", probe.increasing}};
        if (probe.coloop_free) {
            Json dist = Json::array();
            for (const auto &x : probe.distance) {
                dist.push_back(rational_json(x));
            }
            lp["limit"] = rational_json(probe.limit);
            lp["distance"] = dist;
        } else {
            lp["limit"] = "diverges";
        }
        j["limit_probe"] = lp;
        emit(j);
        if (!ok) {
            throw amz::invariant_error("Poincare series disagrees with the solution counts");
        }
        return 0;
    }
    emit(j);
    return 0;
}

int cmd_verify(const Options &o)
{
    amz::VerifyOptions vo;
    if (o.p > 0) {
        vo.p = o.p;
    }
    vo.alpha = o.alpha;
    auto checks = amz::run_suite(o.suite, vo);
    Json arr = Json::array();
    for (const auto &c : checks) {
        std::cerr << c.status << ": " << c.name << "\n";
        arr.push_back(amz::to_json(c));
    }
    bool ok = amz::suite_passed(checks);
    emit(Json{{"suite", o.suite}, {"checks", arr}, {"passed", ok}});
    return ok ? 0 : static_cast<int>(amz::exit_code::invariant);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact invariants of hyperplane arrangements, hypertoric and quiver varieties"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "Worker threads for parallel enumerations")->check(CLI::Range(1U, 256U));

    auto input = [&](CLI::App *s, const char *what) { s->add_option("input", o.input, what)->required(); };
    auto fmt = [&](CLI::App *s) {
        s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "latex", "plain"}));
    };
    const char *arr = "Arrangement JSON file ({\"normals\": [[...], ...]}), or - for stdin";
    const char *quiv = "Quiver JSON file ({\"vertices\": k, \"edges\": [[s, t], ...]}), or - for stdin";

    std::vector<std::pair<CLI::App *, int (*)(const Options &)>> cmds;
    auto add = [&](const char *name, const char *desc, int (*f)(const Options &)) {
        CLI::App *s = app.add_subcommand(name, desc);
        cmds.emplace_back(s, f);
        return s;
    };

    auto *s = add("lattice", "Lattice of flats and structural flags", cmd_lattice);
    input(s, arr);
    s = add("chi", "Characteristic polynomial", cmd_chi);
    input(s, arr);
    fmt(s);
    s->add_option("--p", o.p, "Also count complement points over F_p");
    s = add("mobius", "Mobius function on all comparable pairs of flats", cmd_mobius);
    input(s, arr);
    s = add("hypertoric", "Motivic class of the hypertoric variety", cmd_hypertoric);
    input(s, arr);
    fmt(s);
    s->add_option("--p", o.p, "Also count a generic moment-map fiber over F_p");
    s = add("nakajima", "Nakajima quiver variety classes", cmd_nakajima);
    input(s, quiv);
    fmt(s);
    s->add_option("--w", o.w, "Framing vector (default all ones)")->delimiter(',');
    s->add_option("--D", o.D, "Truncation degree")->check(CLI::NonNegativeNumber);
    s = add("odr", "Open de Rham space class", cmd_odr);
    fmt(s);
    s->add_option("--n", o.n, "Rank")->required();
    s->add_option("--orders", o.orders, "Pole orders, comma separated")->delimiter(',')->required();
    s = add("igusa", "Igusa zeta function of the moment map", cmd_igusa);
    input(s, arr);
    fmt(s);
    s->add_option("--method", o.method, "Algorithm")->check(CLI::IsMember({"chain", "recursion"}));
    s = add("poles", "Pole orders and criteria", cmd_poles);
    input(s, arr);
    s = add("bmu", "Asymptotic solution count B_mu", cmd_bmu);
    input(s, arr);
    fmt(s);
    s = add("bprime", "Cleared numerator B' (arrangement or quiver input)", cmd_bprime);
    input(s, "Arrangement or quiver JSON file, or - for stdin");
    fmt(s);
    s = add("quiver-indec", "Indecomposable (1,...,1)-representations over Z/p^alpha", cmd_quiver_indec);
    input(s, quiv);
    fmt(s);
    s->add_option("--alpha", o.alpha, "Depth")->check(CLI::PositiveNumber);
    s->add_option("--p", o.p, "Prime for a brute-force comparison");
    s = add("quiver-limit", "Normalized limit of the representation counts", cmd_quiver_limit);
    input(s, quiv);
    fmt(s);
    s = add("check-lastone", "Compare the quiver limit with B' of the graphic arrangement", cmd_check_lastone);
    input(s, quiv);
    s = add("oracle", "Count solutions of the moment map modulo p^alpha", cmd_oracle);
    input(s, arr);
    s->add_option("--p", o.p, "Prime (default 5)");
    s->add_option("--alpha", o.alpha, "Depth")->check(CLI::PositiveNumber);
    s = add("verify", "Run a verification suite", cmd_verify);
    s->add_option("--suite", o.suite, "Suite")->check(CLI::IsMember({"paper", "oracle", "properties"}));
    s->add_option("--p", o.p, "Prime for the oracle suite (default 5)");
    s->add_option("--alpha", o.alpha, "Depth for the oracle suite")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(amz::exit_code::parse);
    }
    // verify defaults to depth 2 unless given
    for (auto *sub : app.get_subcommands()) {
        if (sub->get_name() == "verify" && sub->count("--alpha") == 0) {
            o.alpha = 2;
        }
    }

    try {
        amz::config().threads = o.threads;
        for (const auto &[sub, f] : cmds) {
            if (sub->parsed()) {
                return f(o);
            }
        }
    } catch (const amz::error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const Json::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(amz::exit_code::parse);
    }
    return 0;
}
