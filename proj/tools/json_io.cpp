#include "json_io.hpp"

#include "logmonoid/error.hpp"

#include <fstream>

namespace logmonoid::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    return j;
}

}  // namespace

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

Json to_json(const Integer& a) {
    if (a.fits_ll()) return a.to_ll();
    return a.str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) return Integer::parse(j.get<std::string>());
    throw InputError("expected an integer, got " + j.dump());
}

long long small_from_json(const Json& j) {
    Integer a = integer_from_json(j);
    if (!a.fits_ll()) throw InputError("integer " + a.str() + " is too large");
    return a.to_ll();
}

Json to_json(const IntVector& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
    return out;
}

IntVector vector_from_json(const Json& j, Index dim) {
    array(j, "vector");
    if (dim >= 0 && static_cast<Index>(j.size()) != dim)
        throw InputError("vector " + j.dump() + " should have length " + std::to_string(dim));
    IntVector v(static_cast<Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = integer_from_json(j[i]);
    return v;
}

Json to_json(const std::vector<IntVector>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(to_json(v));
    return out;
}

std::vector<IntVector> vectors_from_json(const Json& j, Index dim) {
    std::vector<IntVector> out;
    for (const auto& v : array(j, "vector list")) out.push_back(vector_from_json(v, dim));
    return out;
}

Json matrix_to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        out.push_back(row);
    }
    return out;
}

IntMatrix matrix_from_json(const Json& j) {
    array(j, "matrix");
    const Index rows = static_cast<Index>(j.size());
    const Index cols = rows ? static_cast<Index>(array(j[0], "matrix row").size()) : 0;
    IntMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) m.row(i) = vector_from_json(j[static_cast<size_t>(i)], cols).transpose();
    return m;
}

Json to_json(const FinAbGroup& g) {
    Json t = Json::array();
    for (const auto& d : g.torsion()) t.push_back(to_json(d));
    return Json{{"free_rank", g.free_rank()}, {"torsion", t}};
}

FinAbGroup group_from_json(const Json& j) {
    long long r = small_from_json(field(j, "free_rank"));
    if (r < 0) throw InputError("negative free rank");
    std::vector<Integer> torsion;
    if (j.contains("torsion"))
        for (const auto& d : array(j.at("torsion"), "torsion")) torsion.push_back(integer_from_json(d));
    return FinAbGroup(r, torsion);
}

EmbeddedMonoid monoid_from_json(const Json& j) {
    if (j.is_object() && j.contains("presentation")) {
        const Json& p = j.at("presentation");
        MonoidPresentation pres;
        pres.num_gens = small_from_json(field(p, "num_gens"));
        if (pres.num_gens < 0) throw InputError("negative number of generators");
        if (p.contains("relations"))
            for (const auto& rel : array(p.at("relations"), "relations")) {
                if (!rel.is_array() || rel.size() != 2) throw InputError("a relation is a pair [u, v]");
                pres.relations.emplace_back(vector_from_json(rel[0], pres.num_gens), vector_from_json(rel[1], pres.num_gens));
            }
        IntegralMonoid m = integralize(pres);
        return {m, GroupHom::identity(m.ambient())};
    }
    FinAbGroup g = group_from_json(field(j, "ambient"));
    return generated_submonoid(g, vectors_from_json(field(j, "generators"), g.dim()));
}

Json to_json(const IntegralMonoid& p) { return Json{{"ambient", to_json(p.ambient())}, {"generators", to_json(p.generators())}}; }

Json to_json(const EmbeddedMonoid& p) {
    std::vector<IntVector> gens;
    for (const auto& g : p.monoid.generators()) gens.push_back(p.inclusion.apply(g));
    return Json{{"ambient", to_json(p.inclusion.target())}, {"generators", to_json(gens)}};
}

MonoidHom hom_from_json(const Json& j) {
    auto whole = [](const Json& m) {
        FinAbGroup g = group_from_json(field(m, "ambient"));
        return IntegralMonoid(g, vectors_from_json(field(m, "generators"), g.dim()));
    };
    IntegralMonoid src = whole(field(j, "source")), tgt = whole(field(j, "target"));
    if (j.contains("images")) return MonoidHom::from_images(src, tgt, vectors_from_json(j.at("images"), tgt.ambient().dim()));
    IntMatrix m = matrix_from_json(field(j, "matrix"));
    if (m.rows() != tgt.ambient().dim() || m.cols() != src.ambient().dim())
        throw InputError("hom matrix must be target dim x source dim");
    return MonoidHom(src, tgt, GroupHom(src.ambient(), tgt.ambient(), m));
}

RationalCone cone_from_json(const Json& j) {
    long long d = small_from_json(field(j, "dim"));
    return RationalCone(d, vectors_from_json(field(j, "rays"), d));
}

GammaModule module_from_json(const Json& j) {
    Field f = make_field(small_from_json(field(j, "q")));
    long long d = small_from_json(field(j, "dim"));
    std::vector<FqMatrix> gammas;
    for (const auto& g : array(field(j, "gammas"), "gammas")) {
        std::vector<std::vector<long long>> rows;
        for (const auto& r : array(g, "operator")) {
            rows.emplace_back();
            for (const auto& c : array(r, "operator row")) rows.back().push_back(small_from_json(c));
        }
        FqMatrix m = fq_matrix(*f, rows);
        if (m.rows() != d || m.cols() != d) throw InputError("operator must be dim x dim");
        gammas.push_back(m);
    }
    return GammaModule(f, d, gammas);
}

Json to_json(const GammaModule& m) {
    Json gammas = Json::array();
    for (const auto& g : m.gammas()) gammas.push_back(codes(m.fq(), g));
    return Json{{"q", m.fq().order()}, {"dim", m.dim()}, {"gammas", gammas}};
}

}  // namespace logmonoid::io
