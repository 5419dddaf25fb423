#include "uqgl21/repfile.hpp"

#include <fstream>

#include <json.hpp>

#include "uqgl21/errors.hpp"

namespace uqgl21 {

namespace {
using ordered_json = nlohmann::ordered_json;

ordered_json coeffs_descriptor(const CoeffFamily& fam) {
    if (fam.is_standard) return ordered_json("standard-D");
    ordered_json o = ordered_json::object();
    for (int i = 1; i <= 4; ++i) o["F" + std::to_string(i)] = fam[i].str();
    return o;
}

CoeffFamily coeffs_from_descriptor(const ordered_json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "standard-D")
            throw ParseError("unknown coefficient family '" + j.get<std::string>() + "'");
        return CoeffFamily::standard();
    }
    if (!j.is_object()) throw ParseError("bad coefficient family descriptor");
    CoeffFamily fam;
    fam.is_standard = false;
    for (int i = 1; i <= 4; ++i) {
        std::string key = "F" + std::to_string(i);
        if (!j.contains(key)) throw ParseError("coefficient family missing " + key);
        fam.f[static_cast<std::size_t>(i - 1)] = parse_coeff_fn(j.at(key).get<std::string>());
    }
    return fam;
}

}  // namespace

std::string export_rep_json(const Representation& rep) {
    ordered_json j;
    j["format"] = "uqgl21-rep";
    j["version"] = kRepFileVersion;
    j["params"] = {{"j1", rep.params.j1.str()},
                   {"j2", rep.params.j2.str()},
                   {"j3", rep.params.j3.str()}};
    j["coeffs"] = coeffs_descriptor(rep.params.coeffs);
    j["dimension"] = rep.dim();

    ordered_json basis = ordered_json::array();
    for (const auto& [label, vec] : rep.basis) {
        long h1 = 0, h2 = 0, h3 = 0;
        // Weight triple read off the diagonal matrices.
        int idx = rep.index_of(label);
        h1 = rep.matrix(Gen::H1).at(idx, idx).as_rational().get_num().get_si();
        h2 = rep.matrix(Gen::H2).at(idx, idx).as_rational().get_num().get_si();
        h3 = rep.matrix(Gen::H3).at(idx, idx).as_rational().get_num().get_si();
        basis.push_back(ordered_json{{"tower", label.tower},
                                     {"proj", label.proj.str()},
                                     {"weight", {h1, h2, h3}}});
    }
    j["basis"] = std::move(basis);

    ordered_json gens = ordered_json::object();
    for (Gen g : kAllGens) {
        ordered_json triples = ordered_json::array();
        const QMatrix& m = rep.matrix(g);
        for (int r = 0; r < m.rows(); ++r)
            for (const auto& [c, v] : m.row(r))
                triples.push_back(ordered_json::array({r, c, v.str()}));
        gens[gen_name(g)] = std::move(triples);
    }
    j["generators"] = std::move(gens);
    return j.dump(2) + "\n";
}

void export_rep(const Representation& rep, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << export_rep_json(rep);
}

Representation import_rep_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    try {
        if (!j.contains("format") || j.at("format").get<std::string>() != "uqgl21-rep")
            throw ParseError("not a uqgl21-rep file");
        if (!j.contains("version") || !j.at("version").is_number_integer())
            throw ParseError("missing schema version");
        if (j.at("version").get<int>() != kRepFileVersion)
            throw SchemaVersionMismatch("unsupported schema version " +
                                        std::to_string(j.at("version").get<int>()));

        RealizationParams p;
        p.j1 = HalfInt::parse(j.at("params").at("j1").get<std::string>());
        p.j2 = HalfInt::parse(j.at("params").at("j2").get<std::string>());
        p.j3 = HalfInt::parse(j.at("params").at("j3").get<std::string>());
        p.coeffs = coeffs_from_descriptor(j.at("coeffs"));

        Representation rep;
        rep.params = p;
        // The basis list is the canonical tower-major list, or (for quotient
        // representations) a canonical-order subset of it; vectors are
        // reconstructed from the parameters.
        auto full = build_basis(p);
        const auto& basis = j.at("basis");
        if (j.at("dimension").get<int>() != static_cast<int>(basis.size()))
            throw ParseError("dimension field does not match the basis list");
        std::size_t cursor = 0;
        for (const auto& b : basis) {
            BasisLabel want{b.at("tower").get<int>(),
                            HalfInt::parse(b.at("proj").get<std::string>())};
            while (cursor < full.size() && !(full[cursor].first == want)) ++cursor;
            if (cursor == full.size())
                throw ParseError("basis label " + want.str() +
                                 " is not in canonical tower-major order");
            rep.basis.push_back(full[cursor]);
            ++cursor;
        }
        const int d = rep.dim();
        const auto& gens = j.at("generators");
        for (Gen g : kAllGens) {
            if (!gens.contains(gen_name(g)))
                throw ParseError(std::string("missing generator ") + gen_name(g));
            QMatrix m(d, d);
            for (const auto& t : gens.at(gen_name(g))) {
                if (!t.is_array() || t.size() != 3) throw ParseError("bad sparse triple");
                int r = t.at(0).get<int>(), c = t.at(1).get<int>();
                if (r < 0 || r >= d || c < 0 || c >= d)
                    throw ParseError("triple index out of range");
                m.set(r, c, QScalar::parse(t.at(2).get<std::string>()));
            }
            rep.matrices.emplace(g, std::move(m));
        }
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed rep file: ") + e.what());
    }
}

Representation import_rep(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return import_rep_json(text);
}

std::vector<std::string> export_rep_csv(const Representation& rep, const std::string& stem) {
    std::string base = stem;
    if (base.size() > 4 && base.substr(base.size() - 4) == ".csv")
        base = base.substr(0, base.size() - 4);
    std::vector<std::string> files;
    for (Gen g : kAllGens) {
        std::string path = base + "." + gen_name(g) + ".csv";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot open " + path + " for writing");
        out << "row,col,value\n";
        const QMatrix& m = rep.matrix(g);
        for (int r = 0; r < m.rows(); ++r)
            for (const auto& [c, v] : m.row(r)) out << r << "," << c << "," << v.str() << "\n";
        files.push_back(std::move(path));
    }
    return files;
}

}  // namespace uqgl21
