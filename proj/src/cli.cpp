#include "gkc/cli.hpp"

#include "gkc/audit.hpp"
#include "gkc/descriptor_parse.hpp"
#include "gkc/gkbuild.hpp"
#include "gkc/graph_io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace gkc::cli {

using nlohmann::json;

namespace {

std::string join_labels(const VertexList& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + vs[i].str();
    return s + "}";
}

GraphKind parse_kind(const std::string& s) {
    if (s == "prime") return GraphKind::Prime;
    if (s == "solvable") return GraphKind::Solvable;
    if (s == "compact") return GraphKind::Compact;
    throw std::invalid_argument("unknown graph kind " + s);
}

bool is_classical_lie(const GroupDescriptor& g) {
    return g.kind == GroupDescriptor::Kind::Lie && diagram_family(g).empty();
}

}  // namespace

Graph group_graph(const GroupDescriptor& g, GraphKind kind) {
    using K = GroupDescriptor::Kind;
    if (kind == GraphKind::Solvable) {
        if (g.kind == K::Sporadic && !g.is_tits()) {
            const auto& rec = sporadic_record(g.sporadic);
            if (rec.known_solvable_edges) {
                const auto pi = prime_spectrum(g);
                return Graph::from_primes(std::vector<std::uint64_t>(pi.begin(), pi.end()), *rec.known_solvable_edges);
            }
        }
        throw std::invalid_argument("no solvable graph is available for " + g.name());
    }
    if (kind == GraphKind::Compact) {
        if (g.kind == K::Lie && !diagram_family(g).empty()) return exceptional_compact(g).graph;
        if (is_classical_lie(g)) return classical_compact_partition(make_phi_context(g)).graph;
        return compact_form(group_graph(g, GraphKind::Prime)).quotient;
    }
    switch (g.kind) {
        case K::Cyclic: return Graph::from_primes({g.p}, {});
        case K::Alternating: return gk_altsym(AltSymKind::Alt, g.n);
        case K::Symmetric: return gk_altsym(AltSymKind::Sym, g.n);
        case K::Sporadic:
            if (g.is_tits()) return gk_from_spectrum(spectrum_formulas(g));
            throw std::invalid_argument("the prime graph of " + g.name() + " is not tabulated");
        case K::Lie: break;
    }
    try {
        return gk_from_spectrum(spectrum_formulas(g));
    } catch (const UnsupportedFamily&) {
    }
    if (!diagram_family(g).empty()) return expand_class_graph(exceptional_compact(g).graph);
    return expand_class_graph(classical_compact_partition(make_phi_context(g)).graph);
}

std::vector<CampaignLine> run_campaign(const std::vector<std::string>& subjects,
                                       CampaignLine (*task)(const std::string&), unsigned threads) {
    std::vector<CampaignLine> out(subjects.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, subjects.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < subjects.size();) {
            try {
                out[i] = task(subjects[i]);
            } catch (const nt::BudgetExceeded& e) {
                out[i] = {subjects[i], false, std::string("budget exceeded: ") + e.what()};
            } catch (const std::exception& e) {
                out[i] = {subjects[i], false, e.what()};
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

namespace {

CampaignLine theorem_a_task(const std::string& s) {
    const auto g = parse_descriptor(s);
    const auto kind = g.kind == GroupDescriptor::Kind::Alternating ? AltSymKind::Alt : AltSymKind::Sym;
    const Graph gk = gk_altsym(kind, g.n);
    if (gk.empty()) return {s, true, "empty graph"};
    const auto v = is_split_degree(gk);
    if (!v.split) return {s, false, "GK graph is not split"};
    const auto check = validate_partition(gk, altsym_partition(g.n));
    if (!check.ok) return {s, false, "altsym_partition: " + check.reason};
    return {s, true, {}};
}

CampaignLine theorem_b_task(const std::string& s) {
    const auto& rec = sporadic_record(s);
    std::vector<std::string> problems = sporadic_problems(rec);
    const GroupDescriptor g = GroupDescriptor::sporadic_group(s);
    if (rec.known_solvable_edges) {
        const Graph sg = group_graph(g, GraphKind::Solvable);
        const auto v = is_split_degree(sg);
        if (v.split) problems.push_back("solvable graph is split");
        else if (!v.forbidden && !is_split_forbidden(sg).forbidden) problems.push_back("no forbidden witness");
        if (rec.solvable_witness_W) {
            VertexList W;
            for (auto r : *rec.solvable_witness_W) W.push_back(Label::of_prime(r));
            if (is_split_degree(sg.induced(W)).split) problems.push_back("W does not induce a nonsplit graph");
        }
    }
    if (problems.empty()) return {s, true, {}};
    std::string d;
    for (const auto& p : problems) d += (d.empty() ? "" : "; ") + p;
    return {s, false, d};
}

CampaignLine classical_task(const std::string& s) {
    const auto g = parse_descriptor(s);
    const auto cp = classical_compact_partition(make_phi_context(g));
    const auto check = validate_partition(cp.graph, cp.partition);
    if (!check.ok) return {s, false, check.reason};
    const auto rep = audit(cp.certificate);
    if (!rep.ok()) return {s, false, "audit: " + rep.failures.front().message};
    return {s, true, std::to_string(rep.facts_checked) + " facts"};
}

CampaignLine exceptional_task(const std::string& s) {
    const auto g = parse_descriptor(s);
    const auto ex = exceptional_compact(g);
    if (!ex.stated_partition_valid) {
        std::string d = ex.diagram_id + ": no stated partition validates";
        for (const auto& c : ex.stated_checks)
            if (!c.ok) d += "; " + c.reason;
        return {s, false, d};
    }
    const auto rep = audit(ex.certificate);
    if (!rep.ok()) return {s, false, "audit: " + rep.failures.front().message};
    return {s, true, ex.diagram_id};
}

CampaignLine theorem_c_task(const std::string& s) {
    const auto g = parse_descriptor(s);
    return diagram_family(g).empty() ? classical_task(s) : exceptional_task(s);
}

CampaignLine theorem_d_task(const std::string& s) {
    const auto r = theorem_d_verify(parse_descriptor(s));
    if (!r.verdict.split) return {s, false, "compact graph is not split"};
    std::string d = r.method;
    for (const auto& n : r.notes) d += "; " + n;
    return {s, true, d};
}

}  // namespace

std::vector<std::string> classical_sample() {
    std::vector<std::string> out;
    for (unsigned d = 4; d <= 20; ++d)
        for (unsigned q : {2, 3, 4, 5, 7, 8, 9}) {
            out.push_back("A" + std::to_string(d - 1) + "(" + std::to_string(q) + ")");
            out.push_back("2A" + std::to_string(d - 1) + "(" + std::to_string(q) + ")");
        }
    for (unsigned n = 4; n <= 12; ++n)
        for (unsigned q : {2, 3, 5})
            for (const char* f : {"B", "C", "D", "2D"}) out.push_back(f + std::to_string(n) + "(" + std::to_string(q) + ")");
    return out;
}

std::vector<std::string> exceptional_sample() {
    return {"A1(4)",   "A1(5)",   "A1(7)",   "A1(8)",    "A1(9)",   "A1(11)", "A1(13)", "A1(27)", "A2(3)",
            "A2(4)",   "A2(5)",   "A2(7)",   "2A2(3)",   "2A2(4)",  "2A2(5)", "2A2(8)", "B2(3)",  "B2(4)",
            "B2(5)",   "B2(7)",   "B3(3)",   "B3(4)",    "B3(5)",   "B3(7)",  "G2(3)",  "G2(4)",  "G2(5)",
            "G2(7)",   "G2(8)",   "G2(9)",   "F4(2)",    "F4(3)",   "F4(4)",  "E6(2)",  "E6(3)",  "E6(4)",
            "2E6(2)",  "2E6(3)",  "2E6(4)",  "E7(2)",    "E7(3)",   "E7(4)",  "E8(2)",  "E8(3)",  "E8(4)",
            "2B2(8)",  "2B2(32)", "2B2(128)", "3D4(2)",  "3D4(3)",  "3D4(4)", "2G2(27)", "2G2(243)", "2G2(2187)",
            "2F4(8)",  "2F4(32)", "2F4(128)", "Tits"};
}

std::vector<CampaignLine> campaign_theorem_a(unsigned max_n) {
    std::vector<std::string> s;
    for (unsigned n = 2; n <= max_n; ++n) s.push_back("Sym(" + std::to_string(n) + ")");
    for (unsigned n = 5; n <= max_n; ++n) s.push_back("Alt(" + std::to_string(n) + ")");
    return run_campaign(s, theorem_a_task);
}

std::vector<CampaignLine> campaign_theorem_b() {
    std::vector<std::string> s;
    for (const auto& r : sporadic_table()) s.push_back(r.name);
    return run_campaign(s, theorem_b_task);
}

std::vector<CampaignLine> campaign_theorem_c() {
    auto s = classical_sample();
    const auto e = exceptional_sample();
    s.insert(s.end(), e.begin(), e.end());
    return run_campaign(s, theorem_c_task);
}

std::vector<CampaignLine> campaign_theorem_d(const std::vector<std::string>& descriptors) {
    return run_campaign(descriptors, theorem_d_task);
}

namespace {

struct Options {
    std::string group, input, graph = "prime", format = "table", out_file;
    unsigned max_n = 300;
    std::uint64_t budget = 0;
    std::uint64_t n = 0, p = 0, a = 0, u = 0, w = 0;
    std::string theorem, which;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.out_file.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
        return;
    }
    std::ofstream f(o.out_file);
    if (!f) throw std::runtime_error("cannot write " + o.out_file);
    f << text;
}

Graph input_graph(const Options& o) {
    if (o.group.empty() == o.input.empty()) throw std::invalid_argument("give exactly one of --group or --input");
    if (!o.input.empty()) {
        std::ifstream f(o.input);
        if (!f) throw std::invalid_argument("cannot read " + o.input);
        const Graph g = graph_from_json(json::parse(f));
        if (parse_kind(o.graph) == GraphKind::Compact) return compact_form(g).quotient;
        return g;
    }
    return group_graph(parse_descriptor(o.group), parse_kind(o.graph));
}

std::string render_graph(const Options& o, const Graph& g) {
    if (o.format == "json") return graph_to_json(g).dump(2);
    if (o.format == "dot") return to_dot(g);
    if (o.format == "table") return to_table(g);
    throw std::invalid_argument("unknown format " + o.format);
}

int do_build(const Options& o, std::ostream& out) {
    emit(o, out, render_graph(o, input_graph(o)));
    return Ok;
}

int do_compact(const Options& o, std::ostream& out) {
    Options base = o;
    if (base.graph == "compact") base.graph = "prime";
    Graph g;
    if (!o.group.empty() && base.graph == "prime") {
        const auto d = parse_descriptor(o.group);
        if (d.kind == GroupDescriptor::Kind::Lie && (!diagram_family(d).empty() || is_classical_lie(d))) {
            bool have_spectrum = true;
            try {
                spectrum_formulas(d);
            } catch (const UnsupportedFamily&) {
                have_spectrum = false;
            }
            if (!have_spectrum) {
                emit(o, out, render_graph(o, group_graph(d, GraphKind::Compact)));
                return Ok;
            }
        }
    }
    g = input_graph(base);
    const auto cf = compact_form(g);
    if (o.format == "json") emit(o, out, compact_to_json(cf).dump(2));
    else if (o.format == "dot") emit(o, out, to_dot(cf.quotient, "compact"));
    else {
        std::ostringstream s;
        for (const auto& [cls, members] : cf.class_contents) s << cls.str() << " : " << join_labels(members) << '\n';
        s << to_table(cf.quotient);
        emit(o, out, s.str());
    }
    return Ok;
}

int do_split(const Options& o, std::ostream& out, std::ostream& err) {
    const Graph g = input_graph(o);
    if (g.empty()) {
        emit(o, out, o.format == "json" ? json{{"schema", "gkc.split/1"}, {"split", true}}.dump(2) : "split: yes (empty)");
        return Ok;
    }
    const auto v = is_split_degree(g);
    const auto f = is_split_forbidden(g);
    if (v.split != f.split) {
        err << "internal inconsistency between split recognizers\n";
        return Error;
    }
    json j{{"schema", "gkc.split/1"}, {"split", v.split}, {"m", v.m_index}, {"graph", graph_to_json(g)}};
    std::ostringstream s;
    if (v.split) {
        const auto& part = *v.partition;
        if (!validate_partition(g, part)) {
            err << "partition failed revalidation\n";
            return Error;
        }
        j["partition"] = {{"C", json::array()}, {"I", json::array()}, {"special", part.special}};
        for (const auto& c : part.C) j["partition"]["C"].push_back(label_to_json(c));
        for (const auto& i : part.I) j["partition"]["I"].push_back(label_to_json(i));
        s << "split: yes\nm = " << v.m_index << "\nC = " << join_labels(part.C) << "\nI = " << join_labels(part.I)
          << '\n';
    } else {
        const auto& w = *f.forbidden;
        if (!witness_holds(g, w)) {
            err << "witness failed revalidation\n";
            return Error;
        }
        j["witness"] = {{"kind", to_string(w.kind)}, {"vertices", json::array()}};
        for (const auto& x : w.vertices) j["witness"]["vertices"].push_back(label_to_json(x));
        s << "split: no\nwitness " << to_string(w.kind) << " " << join_labels(w.vertices) << '\n';
    }
    emit(o, out, o.format == "json" ? j.dump(2) : s.str());
    return v.split ? Ok : Refuted;
}

int do_export(const Options& o, std::ostream& out) {
    Options e = o;
    if (e.format == "table") e.format = "json";
    emit(e, out, render_graph(e, input_graph(e)));
    return Ok;
}

int print_campaign(const Options& o, std::ostream& out, const std::string& title,
                   const std::vector<CampaignLine>& lines) {
    std::ostringstream s;
    std::size_t pass = 0;
    json arr = json::array();
    for (const auto& l : lines) {
        pass += l.pass;
        s << (l.pass ? "PASS " : "FAIL ") << l.subject << (l.detail.empty() ? "" : "  " + l.detail) << '\n';
        arr.push_back({{"subject", l.subject}, {"pass", l.pass}, {"detail", l.detail}});
    }
    s << title << ": " << pass << "/" << lines.size() << " passed\n";
    if (o.format == "json")
        emit(o, out, json{{"schema", "gkc.campaign/1"}, {"campaign", title}, {"results", arr}}.dump(2));
    else
        emit(o, out, s.str());
    return pass == lines.size() ? Ok : Refuted;
}

std::vector<std::string> default_theorem_d_subjects() {
    std::vector<std::string> s = {"Z(2)", "Z(3)", "Z(7)"};
    for (unsigned n = 5; n <= 40; ++n) s.push_back("Alt(" + std::to_string(n) + ")");
    for (const auto& r : sporadic_table()) s.push_back(r.name);
    for (const auto& x : exceptional_sample()) s.push_back(x);
    for (unsigned d = 4; d <= 10; ++d)
        for (unsigned q : {2, 3, 4, 5}) {
            s.push_back("A" + std::to_string(d - 1) + "(" + std::to_string(q) + ")");
            s.push_back("2A" + std::to_string(d - 1) + "(" + std::to_string(q) + ")");
        }
    for (unsigned n = 4; n <= 8; ++n)
        for (const char* f : {"B", "C", "D", "2D"}) s.push_back(f + std::to_string(n) + "(3)");
    return s;
}

int do_verify(const Options& o, std::ostream& out) {
    if (o.theorem == "theorem-a") return print_campaign(o, out, "theorem-a", campaign_theorem_a(o.max_n));
    if (o.theorem == "theorem-b") return print_campaign(o, out, "theorem-b", campaign_theorem_b());
    if (o.theorem == "theorem-c") return print_campaign(o, out, "theorem-c", campaign_theorem_c());
    if (o.theorem == "theorem-d") {
        const auto subjects = o.group.empty() ? default_theorem_d_subjects() : std::vector<std::string>{o.group};
        return print_campaign(o, out, "theorem-d", campaign_theorem_d(subjects));
    }
    throw std::invalid_argument("unknown theorem " + o.theorem);
}

int print_certificate(const Options& o, std::ostream& out, std::ostream& err, const std::string& headline,
                      const Certificate& c) {
    const auto rep = audit(c);
    const auto structure = check_structure(c);
    json j = certificate_to_json(c);
    if (o.format == "json") {
        j["audit"] = {{"facts_checked", rep.facts_checked}, {"assumptions", rep.assumptions}, {"ok", rep.ok()}};
        emit(o, out, j.dump(2));
    } else {
        std::ostringstream s;
        s << headline << '\n'
          << "audit: " << rep.facts_checked << " facts checked, " << rep.assumptions << " assumptions, "
          << rep.failures.size() << " failures\n"
          << j.dump(2) << '\n';
        emit(o, out, s.str());
    }
    for (const auto& f : rep.failures) err << "claim " << f.claim << " fact " << f.fact << ": " << f.message << '\n';
    if (!structure.ok) err << "structure: " << structure.reason << '\n';
    return rep.ok() && structure.ok ? Ok : Error;
}

int do_witness(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.which == "prop71") {
        const auto lw = nonsplit_witness_linear(static_cast<unsigned>(o.n), o.p, static_cast<unsigned>(o.a));
        std::ostringstream h;
        h << "witness {" << lw.r1 << "," << lw.r2 << "," << lw.s1 << "," << lw.s2 << "}  k1 = " << lw.k1
          << ", k2 = " << lw.k2;
        return print_certificate(o, out, err, h.str(), lw.certificate);
    }
    if (o.which == "prop72") return print_certificate(o, out, err, "solvable-graph chain for PSL_uw(p^3)", prop72_certificate(o.u, o.w, o.p));
    if (o.which == "prop73") {
        const auto c = sc_nonsplit_certificate(o.n, o.p);
        return print_certificate(o, out, err, "witness " + join_labels(c.witness->vertices), c);
    }
    if (o.which == "psl11") {
        const auto r = psl11_2_sc();
        return print_certificate(o, out, err, "witness " + join_labels(r.witness.vertices), r.certificate);
    }
    throw std::invalid_argument("unknown witness " + o.which);
}

int do_sporadic(const Options& o, std::ostream& out) {
    auto set_str = [](const nt::PrimeSet& s) {
        std::string r = "{";
        for (auto x : s) r += (r.size() > 1 ? "," : "") + std::to_string(x);
        return r + "}";
    };
    json arr = json::array();
    std::ostringstream s;
    for (const auto& r : sporadic_table()) {
        if (!o.group.empty() && r.name != GroupDescriptor::sporadic_group(o.group).sporadic) continue;
        const auto problems = sporadic_problems(r);
        s << r.name << "  C=" << set_str(r.prime_partition.C) << " I=" << set_str(r.prime_partition.I);
        if (r.solvable_partition)
            s << "  S: C=" << set_str(r.solvable_partition->C) << " I=" << set_str(r.solvable_partition->I);
        if (r.solvable_witness_W) s << "  W=" << set_str(*r.solvable_witness_W);
        for (const auto& p : problems) s << "  [" << p << "]";
        s << '\n';
        arr.push_back({{"name", r.name},
                       {"C", r.prime_partition.C},
                       {"I", r.prime_partition.I},
                       {"problems", problems}});
    }
    emit(o, out, o.format == "json" ? json{{"schema", "gkc.sporadic-report/1"}, {"groups", arr}}.dump(2) : s.str());
    return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gruenberg-Kegel graph toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sc, bool graph_input) {
        sc->add_option("--format", o.format, "json | dot | table")->check(CLI::IsMember({"json", "dot", "table"}));
        sc->add_option("--out", o.out_file, "write output to FILE");
        sc->add_option("--budget", o.budget, "Brent rho iterations per cofactor");
        if (graph_input) {
            sc->add_option("--group", o.group, "group descriptor, e.g. A3(4), 2B2(32), M22");
            sc->add_option("--input", o.input, "graph JSON file");
            sc->add_option("--graph", o.graph, "prime | solvable | compact")
                ->check(CLI::IsMember({"prime", "solvable", "compact"}));
        }
    };
    auto* build = app.add_subcommand("build", "build a graph");
    auto* split = app.add_subcommand("split", "decide splitness");
    auto* compact = app.add_subcommand("compact", "compute the compact form");
    auto* exp = app.add_subcommand("export", "export a graph as JSON or DOT");
    for (auto* sc : {build, split, compact, exp}) add_common(sc, true);

    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    add_common(verify, false);
    verify->add_option("theorem", o.theorem, "theorem-a | theorem-b | theorem-c | theorem-d")->required();
    verify->add_option("--max-n", o.max_n, "largest degree for theorem-a");
    verify->add_option("--group", o.group, "single descriptor for theorem-d");

    auto* witness = app.add_subcommand("witness", "emit a non-splitness certificate");
    add_common(witness, false);
    witness->add_option("which", o.which, "prop71 | prop72 | prop73 | psl11")->required();
    witness->add_option("--n", o.n);
    witness->add_option("--p", o.p);
    witness->add_option("--a", o.a);
    witness->add_option("--u", o.u);
    witness->add_option("--w", o.w);

    auto* sporadic = app.add_subcommand("sporadic", "print the sporadic tables");
    add_common(sporadic, false);
    sporadic->add_option("--group", o.group);

    std::vector<std::string> argv_store{"gkc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Error;
    }

    if (o.budget) {
        auto b = nt::default_budget();
        b.rho_iterations = o.budget;
        nt::set_default_budget(b);
    }
    try {
        if (build->parsed()) return do_build(o, out);
        if (split->parsed()) return do_split(o, out, err);
        if (compact->parsed()) return do_compact(o, out);
        if (exp->parsed()) return do_export(o, out);
        if (verify->parsed()) return do_verify(o, out);
        if (witness->parsed()) return do_witness(o, out, err);
        if (sporadic->parsed()) return do_sporadic(o, out);
    } catch (const nt::BudgetExceeded& e) {
        err << "factoring budget exceeded: " << e.what() << '\n';
        return BudgetExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return Error;
    }
    return Error;
}

}  // namespace gkc::cli
