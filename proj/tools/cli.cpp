#include "cli.hpp"

#include "json_io.hpp"
#include "logmonoid/error.hpp"
#include "logmonoid/monalg.hpp"
#include "support/acceptance.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace logmonoid::cli {

namespace {

using io::Json;

struct Flags {
    std::string in, out, subgroup, n, chi, d, suite;
    long long m = 0, q = 0, depth = 3, degree = 3, r = 0;
    unsigned long long seed = 0;
    std::string bound;
    size_t a = 0, b = 0, cover = 0;
};

struct Context {
    Flags flags;
    Json notes = Json::array();
    int exit_code = 0;
};

using Handler = std::function<Json(Context&)>;

std::vector<long long> int_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw InputError("expected a comma-separated integer list, got \"" + s + "\"");
        }
    }
    return out;
}

Integer enumeration_bound(Context& ctx) {
    if (!ctx.flags.bound.empty()) return Integer::parse(ctx.flags.bound);
    if (const char* env = std::getenv("LOGMONOID_BOUND")) {
        ctx.notes.push_back(std::string("bound from LOGMONOID_BOUND = ") + env);
        return Integer::parse(env);
    }
    return kCoverBound;
}

LogPoint read_point(const std::string& path) {
    return LogPoint(io::monoid_from_json(io::read_file(path)).monoid);
}

Json cycles(const std::vector<size_t>& perm) {
    Json out = Json::array();
    std::vector<bool> seen(perm.size(), false);
    for (size_t start = 0; start < perm.size(); ++start) {
        if (seen[start]) continue;
        Json cycle = Json::array();
        for (size_t x = start; !seen[x]; x = perm[x]) {
            seen[x] = true;
            cycle.push_back(x);
        }
        out.push_back(cycle);
    }
    return out;
}

Json cover_json(const FketCover& c) {
    GammaSet f = fiber_functor(c);
    Json monodromy = Json::array();
    for (const auto& perm : f.action) monodromy.push_back(cycles(perm));
    return Json{{"level", io::to_json(c.level)},
                {"subgroup", io::to_json(c.subgroup)},
                {"degree", io::to_json(c.degree())},
                {"generators", io::to_json(c.generators)},
                {"fiber", io::to_json(f.elements)},
                {"monodromy", monodromy}};
}

// monoid

Json monoid_sat(Context& ctx) {
    EmbeddedMonoid e = io::monoid_from_json(io::read_file(ctx.flags.in));
    return io::to_json(EmbeddedMonoid{saturate(e.monoid), e.inclusion});
}

Json monoid_props(Context& ctx) {
    EmbeddedMonoid e = io::monoid_from_json(io::read_file(ctx.flags.in));
    Predicates p = predicates(e.monoid);
    return Json{{"fine", p.fine}, {"integral", p.integral}, {"saturated", p.saturated}, {"sharp", p.sharp}, {"toric", p.toric}};
}

Json monoid_gp(Context& ctx) {
    EmbeddedMonoid e = io::monoid_from_json(io::read_file(ctx.flags.in));
    return Json{{"group", io::to_json(e.monoid.ambient())}, {"inclusion", io::matrix_to_json(e.inclusion.matrix())}};
}

Json monoid_units(Context& ctx) {
    EmbeddedMonoid e = io::monoid_from_json(io::read_file(ctx.flags.in));
    Units u = units(e.monoid);
    std::vector<IntVector> gens;
    for (const auto& g : u.generators) gens.push_back(e.inclusion.apply(g));
    return Json{{"group", io::to_json(u.group.group)}, {"generators", io::to_json(gens)}};
}

Json monoid_sharp(Context& ctx) {
    EmbeddedMonoid e = io::monoid_from_json(io::read_file(ctx.flags.in));
    Sharpening s = sharpen(e.monoid);
    return Json{{"monoid", io::to_json(s.monoid)}, {"projection", io::matrix_to_json(s.projection.matrix())}};
}

Json monoid_hilbert(Context& ctx) {
    RationalCone c = io::cone_from_json(io::read_file(ctx.flags.in));
    return Json{{"hilbert_basis", io::to_json(hilbert_basis(c))}};
}

// kummer

Json kummer_check(Context& ctx) {
    KummerCheck k = is_kummer(io::hom_from_json(io::read_file(ctx.flags.in)));
    Json out{{"kummer", k.ok}};
    if (!k.ok) {
        out["clause"] = k.clause;
        out["witness"] = k.witness ? io::to_json(*k.witness) : Json();
    }
    return out;
}

Json kummer_coker(Context& ctx) {
    FinAbGroup g = cokernel_group(io::hom_from_json(io::read_file(ctx.flags.in)));
    return Json{{"G", io::to_json(g)}};
}

Json kummer_ramification(Context& ctx) {
    KummerData d = kummer_data(io::hom_from_json(io::read_file(ctx.flags.in)));
    return Json{{"ramification_index", io::to_json(ramification_index(d))}};
}

Json kummer_abhyankar(Context& ctx) {
    std::vector<Integer> d;
    for (long long x : int_list(ctx.flags.d)) d.emplace_back(x);
    Json monoids = Json::array();
    for (const auto& a : abhyankar_classify(ctx.flags.r, d))
        monoids.push_back(Json{{"subgroup", io::to_json(a.subgroup)}, {"generators", io::to_json(a.generators)}});
    return Json{{"count", monoids.size()}, {"monoids", monoids}};
}

// covers

Json covers_enum(Context& ctx) {
    LogPoint pt = read_point(ctx.flags.in);
    Json covers = Json::array();
    for (const auto& c : enumerate_connected_covers(pt, Integer(ctx.flags.m), enumeration_bound(ctx)))
        covers.push_back(cover_json(c));
    return Json{{"count", covers.size()}, {"covers", covers}};
}

const FketCover& pick(const std::vector<FketCover>& covers, size_t i) {
    if (i >= covers.size())
        throw InputError("cover index " + std::to_string(i) + " out of range, there are " + std::to_string(covers.size()));
    return covers[i];
}

Json covers_fiber_product(Context& ctx) {
    LogPoint pt = read_point(ctx.flags.in);
    auto covers = enumerate_connected_covers(pt, Integer(ctx.flags.m), enumeration_bound(ctx));
    const FketCover &c1 = pick(covers, ctx.flags.a), &c2 = pick(covers, ctx.flags.b);
    FiberProduct fp = cover_fiber_product(c1, c2);
    GammaSet comp = fiber_functor(fp.component);
    if (Integer(static_cast<long long>(fp.orbits.size())) != fp.components ||
        Integer(static_cast<long long>(fp.product.size())) != fp.components * Integer(static_cast<long long>(comp.size())))
        throw VerificationFailure("fiber of the fiber product does not match its components");
    Json orbits = Json::array();
    for (const auto& o : fp.orbits) orbits.push_back(o);
    return Json{{"components", io::to_json(fp.components)},
                {"component", cover_json(fp.component)},
                {"sum", io::to_json(fp.sum.monoid)},
                {"orbits", orbits},
                {"isomorphisms", fp.isomorphisms}};
}

Json covers_quotient(Context& ctx) {
    LogPoint pt = read_point(ctx.flags.in);
    auto covers = enumerate_connected_covers(pt, Integer(ctx.flags.m), enumeration_bound(ctx));
    const FketCover& c = pick(covers, ctx.flags.cover);
    QuotientCover q = cover_quotient(c, io::vectors_from_json(io::read_file(ctx.flags.subgroup), pt.rank()));
    return Json{{"cover", cover_json(q.cover)}, {"acting_order", io::to_json(q.acting_order)}, {"restriction", q.restriction}};
}

// cohom

Json cohom_koszul(Context& ctx) {
    GammaModule m = io::module_from_json(io::read_file(ctx.flags.in));
    KoszulComplex k = koszul_complex(m);
    Json terms = Json::array();
    for (Index i = 0; i <= m.rank(); ++i) terms.push_back(k.term_dim(i));
    return Json{{"term_dims", terms}, {"dims", koszul_cohomology(m).dims}};
}

Json nearby_json(const NearbyCycles& nu) { return Json{{"dims", nu.dims}, {"stable_level", nu.stable_level}}; }

Json cohom_nearby(Context& ctx) {
    GammaModule m = io::module_from_json(io::read_file(ctx.flags.in));
    std::vector<long long> n = ctx.flags.n.empty() ? std::vector<long long>(static_cast<size_t>(m.rank()), 1) : int_list(ctx.flags.n);
    if (ctx.flags.m == 0) return nearby_json(nearby_unipotent(m, n));
    QuasiUnipotentNearby q = nearby_quasi_unipotent(m, n, ctx.flags.m);
    Json out = nearby_json(q.result);
    out["tower_checked"] = q.tower_checked;
    return out;
}

Json cohom_character(Context& ctx) {
    LogPoint pt = read_point(ctx.flags.in);
    std::vector<long long> chi = int_list(ctx.flags.chi);
    Annihilation a = annihilation_check(character_module(pt, ctx.flags.m, chi, make_field(ctx.flags.q)));
    IntVector c(pt.rank());
    if (static_cast<Index>(chi.size()) != pt.rank()) throw InputError("--chi needs one entry per generator of the group");
    for (Index i = 0; i < pt.rank(); ++i) c(i) = chi[static_cast<size_t>(i)];
    Json out{{"dims", a.dims}, {"trivial", !a.applicable}};
    if (a.applicable) out["witness"] = a.witness;
    out["s_chi"] = io::to_json(s_chi(pt, ctx.flags.m, c));
    return out;
}

// monalg

Json monalg_cech(Context& ctx) {
    KummerData d = kummer_data(io::hom_from_json(io::read_file(ctx.flags.in)));
    CechReport r = verify_cech_exact(d, ctx.flags.degree, ctx.flags.depth, make_field(ctx.flags.q));
    ctx.notes.push_back("verified in degrees <= " + std::to_string(ctx.flags.degree) + " up to depth " +
                        std::to_string(ctx.flags.depth));
    Json chars = Json::array();
    for (const auto& c : r.characters)
        chars.push_back(Json{{"chi", io::to_json(c.chi)}, {"term_dims", c.term_dims}, {"homology", c.homology}});
    if (!r.exact) ctx.exit_code = VerificationFailure("").exit_code();
    return Json{{"exact", r.exact},
                {"h0_correct", r.h0_correct},
                {"term_dims", r.term_dims},
                {"homology", r.homology},
                {"characters", chars}};
}

// replicate

Json criterion_json(const acceptance::Criterion& c) {
    return Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

Json replicate(Context& ctx) {
    std::vector<int> ids;
    if (ctx.flags.suite == "all") {
        for (int id = 1; id <= acceptance::kCriteria; ++id) ids.push_back(id);
    } else {
        for (long long id : int_list(ctx.flags.suite)) {
            if (id < 1 || id > acceptance::kCriteria) throw InputError("no criterion " + std::to_string(id));
            ids.push_back(static_cast<int>(id));
        }
    }
    Json criteria = Json::array();
    std::vector<Json> runs;
    bool all = true;
    for (int id : ids) {
        acceptance::Criterion c;
        if (id < acceptance::kCriteria) {
            c = acceptance::run_criterion(id, ctx.flags.seed);
        } else {
            // Two more in-process runs of the suite, compared as serialized text.
            std::string first, second;
            for (std::string* text : {&first, &second}) {
                Json s = Json::array();
                for (const auto& x : acceptance::run_suite(ctx.flags.seed)) s.push_back(criterion_json(x));
                *text = s.dump();
            }
            c.id = id;
            c.name = acceptance::criterion_name(id);
            c.pass = first == second;
            c.detail = c.pass ? "two runs of criteria 1-10 serialize identically" : "two runs of criteria 1-10 differ";
        }
        all = all && c.pass;
        criteria.push_back(criterion_json(c));
    }
    if (!all) ctx.exit_code = VerificationFailure("").exit_code();
    return Json{{"passed", all}, {"criteria", criteria}};
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
    err << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx;
    Flags& f = ctx.flags;
    CLI::App app{"Monoids, Kummer covers of log points, and monodromy cohomology", "logmonoid"};
    app.require_subcommand(1);
    std::map<CLI::App*, Handler> handlers;

    auto verb = [&](const std::string& name, const std::string& about) {
        CLI::App* v = app.add_subcommand(name, about);
        v->require_subcommand(1);
        return v;
    };
    auto leaf = [&](CLI::App* v, const std::string& name, const std::string& about, Handler h) {
        CLI::App* s = v->add_subcommand(name, about);
        s->add_option("--out", f.out, "Write the report here instead of stdout");
        handlers[s] = std::move(h);
        return s;
    };
    auto input = [&](CLI::App* s, const std::string& names, const std::string& about) {
        s->add_option(names, f.in, about)->required();
    };
    auto bound = [&](CLI::App* s) { s->add_option("--bound", f.bound, "Enumeration bound, overrides LOGMONOID_BOUND"); };

    CLI::App* monoid = verb("monoid", "Monoid operations");
    input(leaf(monoid, "sat", "Saturation", monoid_sat), "--in", "Monoid JSON");
    input(leaf(monoid, "props", "Fine, integral, saturated, sharp, toric", monoid_props), "--in", "Monoid JSON");
    input(leaf(monoid, "gp", "Group completion", monoid_gp), "--in", "Monoid JSON");
    input(leaf(monoid, "units", "Units", monoid_units), "--in", "Monoid JSON");
    input(leaf(monoid, "sharp", "Quotient by units", monoid_sharp), "--in", "Monoid JSON");
    input(leaf(monoid, "hilbert", "Hilbert basis of a cone", monoid_hilbert), "--in", "Cone JSON");

    CLI::App* kummer = verb("kummer", "Kummer homomorphisms");
    input(leaf(kummer, "check", "Is the hom Kummer", kummer_check), "--in", "Hom JSON");
    input(leaf(kummer, "coker", "Cokernel group", kummer_coker), "--in", "Hom JSON");
    input(leaf(kummer, "ramification", "Ramification index", kummer_ramification), "--in", "Hom JSON");
    CLI::App* abh = leaf(kummer, "abhyankar", "Monoids between Z>=0^r and its divided copy", kummer_abhyankar);
    abh->add_option("--r", f.r, "Rank")->required();
    abh->add_option("--d", f.d, "Divisors d_1,...,d_r")->required();

    CLI::App* covers = verb("covers", "Finite Kummer etale covers of a log point");
    CLI::App* cenum = leaf(covers, "enum", "Connected covers of level m", covers_enum);
    CLI::App* cfp = leaf(covers, "fiber-product", "Fiber product of two enumerated covers", covers_fiber_product);
    CLI::App* cquo = leaf(covers, "quotient", "Quotient of an enumerated cover", covers_quotient);
    for (CLI::App* s : {cenum, cfp, cquo}) {
        input(s, "--in,--point", "Monoid JSON of the log point");
        s->add_option("--m", f.m, "Level")->required()->check(CLI::PositiveNumber);
        bound(s);
    }
    cfp->add_option("--a", f.a, "Index of the first cover")->required();
    cfp->add_option("--b", f.b, "Index of the second cover")->required();
    cquo->add_option("--cover", f.cover, "Index of the cover")->required();
    cquo->add_option("--subgroup", f.subgroup, "JSON list of generators of H in (Z/m)^n")->required();

    CLI::App* cohom = verb("cohom", "Koszul cohomology of monodromy modules");
    input(leaf(cohom, "koszul", "Cohomology of a module", cohom_koszul), "--in,--module", "Module JSON");
    CLI::App* nearby = leaf(cohom, "nearby", "Nearby cycles", cohom_nearby);
    input(nearby, "--in,--module", "Module JSON");
    nearby->add_option("--n", f.n, "Multiplicities n_1,...,n_k, default all 1");
    nearby->add_option("--m", f.m, "Level of the quasi-unipotent reduction")->check(CLI::PositiveNumber);
    CLI::App* character = leaf(cohom, "character", "Cohomology of a character of level m", cohom_character);
    input(character, "--in,--point", "Monoid JSON of the log point");
    character->add_option("--m", f.m, "Level")->required()->check(CLI::PositiveNumber);
    character->add_option("--q", f.q, "Field order")->required();
    character->add_option("--chi", f.chi, "Character chi_1,...,chi_n")->required();

    CLI::App* monalg = verb("monalg", "Monoid algebras");
    CLI::App* cech = leaf(monalg, "cech", "Exactness of the truncated Cech complex", monalg_cech);
    input(cech, "--in,--u", "Hom JSON");
    cech->add_option("--q", f.q, "Field order")->required();
    cech->add_option("--depth", f.depth, "Number of terms past R[P]")->check(CLI::PositiveNumber);
    cech->add_option("--degree", f.degree, "Degree bound")->check(CLI::NonNegativeNumber);

    CLI::App* rep = app.add_subcommand("replicate", "Acceptance suite");
    rep->add_option("suite", f.suite, "\"all\" or criterion ids")->required();
    rep->add_option("--seed", f.seed, "Seed")->required();
    rep->add_option("--out", f.out, "Write the report here instead of stdout");
    handlers[rep] = replicate;

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
        write_error(err, "usage", e.what());
        return 1;
    }

    CLI::App* verb_app = app.get_subcommands().front();
    CLI::App* leaf_app = verb_app == rep ? rep : verb_app->get_subcommands().front();
    Json echo{{"verb", verb_app->get_name()}, {"subverb", leaf_app == rep ? f.suite : leaf_app->get_name()}};
    Json flags = Json::object();
    for (const CLI::Option* o : leaf_app->get_options()) {
        if (o->count() == 0 || o->get_lnames().empty()) continue;
        if (o->get_lnames().front() == "help" || o->get_lnames().front() == "out") continue;
        flags[o->get_lnames().front()] = o->results().front();
    }
    echo["args"] = flags;

    Json report;
    try {
        Json results = handlers.at(leaf_app)(ctx);
        report = Json{{"command", echo}, {"results", results}, {"notes", ctx.notes}};
    } catch (const Error& e) {
        write_error(err, e.kind(), e.what());
        return e.exit_code();
    } catch (const std::exception& e) {
        write_error(err, "internal", e.what());
        return 1;
    }

    const std::string text = report.dump(2) + "\n";
    if (f.out.empty()) {
        out << text;
    } else {
        std::ofstream file(f.out);
        if (!(file << text)) {
            write_error(err, "io", "cannot write " + f.out);
            return 1;
        }
    }
    return ctx.exit_code;
}

}  // namespace logmonoid::cli
