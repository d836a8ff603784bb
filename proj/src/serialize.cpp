#include "jtri/serialize.hpp"

#include <fstream>

namespace jtri {

json to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw IoError("complex number must be a [re, im] pair");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

json to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j)
            row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.dim()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    try {
        const int dim = j.at("dim").get<int>();
        const json& rows = j.at("entries");
        if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
            throw IoError("matrix entries must have dim rows");
        std::vector<cplx> entries;
        entries.reserve(static_cast<std::size_t>(dim) * dim);
        for (const json& row : rows) {
            if (!row.is_array() || static_cast<int>(row.size()) != dim)
                throw IoError("matrix entries must have dim columns");
            for (const json& z : row)
                entries.push_back(cplx_from_json(z));
        }
        return ComplexMatrix(dim, std::move(entries));
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed matrix: ") + e.what());
    } catch (const Error&) {
        throw;
    }
}

json to_json(const Subspace& s) {
    json basis = json::array();
    for (const Vec& v : s.basis()) {
        json vec = json::array();
        for (const cplx& z : v)
            vec.push_back(to_json(z));
        basis.push_back(std::move(vec));
    }
    return json{{"ambient_dim", s.ambient_dim()}, {"basis", std::move(basis)}};
}

Subspace subspace_from_json(const json& j) {
    try {
        const int n = j.at("ambient_dim").get<int>();
        std::vector<Vec> vectors;
        for (const json& vec : j.at("basis")) {
            Vec v;
            for (const json& z : vec)
                v.push_back(cplx_from_json(z));
            vectors.push_back(std::move(v));
        }
        return span(n, vectors, ToleranceConfig{});
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed subspace: ") + e.what());
    }
}

json to_json(const AlgebraBasis& b) {
    json basis = json::array();
    for (const ComplexMatrix& m : b.space.basis())
        basis.push_back(to_json(m));
    json log = json::array();
    for (const auto& [round, dim] : b.generation_log)
        log.push_back(json::array({round, dim}));
    return json{{"kind", to_string(b.kind)},
                {"basis", std::move(basis)},
                {"log", std::move(log)}};
}

json to_json(const SpectralDecomposition& d) {
    json clusters = json::array();
    for (const SpectralCluster& c : d.clusters)
        clusters.push_back(json{{"lambda", to_json(c.lambda)},
                                {"multiplicity", c.multiplicity},
                                {"projection", to_json(c.projection)}});
    return clusters;
}

json to_json(const IdentityReport& r) {
    json checks = json::array();
    for (const IdentityCheck& c : r.checks)
        checks.push_back(json{{"name", c.name},
                              {"residual", c.residual},
                              {"threshold", c.threshold},
                              {"pass", c.pass}});
    return checks;
}

json to_json(const SubspaceChain& c) {
    json links = json::array();
    for (const Subspace& s : c.links)
        links.push_back(to_json(s));
    return json{{"ambient_dim", c.ambient_dim},
                {"dims", c.dims()},
                {"links", std::move(links)}};
}

json to_json(const TriangularizationCertificate& c) {
    return json{{"chain_dims", c.chain.dims()},
                {"conjugator", to_json(c.conjugator)},
                {"residual", c.residual}};
}

json to_json(const InstanceFile& f) {
    json meta{{"seed", f.metadata.seed},
              {"model", f.metadata.model},
              {"label", f.metadata.label}};
    if (f.metadata.hidden_conjugator)
        meta["hidden_conjugator"] = to_json(*f.metadata.hidden_conjugator);
    json gens = json::array();
    for (const ComplexMatrix& g : f.generators)
        gens.push_back(to_json(g));
    return json{{"schema_version", f.schema_version},
                {"dim", f.dim},
                {"generators", std::move(gens)},
                {"metadata", std::move(meta)}};
}

InstanceFile instance_from_json(const json& j) {
    try {
        InstanceFile f;
        f.schema_version = j.at("schema_version").get<int>();
        if (f.schema_version != 1)
            throw IoError("unsupported schema_version");
        f.dim = j.at("dim").get<int>();
        for (const json& g : j.at("generators"))
            f.generators.push_back(matrix_from_json(g));
        if (f.generators.empty())
            throw IoError("instance has no generators");
        for (const ComplexMatrix& g : f.generators)
            if (g.dim() != f.dim)
                throw IoError("generator dimension does not match instance");
        if (j.contains("metadata")) {
            const json& meta = j.at("metadata");
            f.metadata.seed = meta.value("seed", 0ULL);
            f.metadata.model = meta.value("model", std::string{});
            f.metadata.label = meta.value("label", std::string{});
            if (meta.contains("hidden_conjugator"))
                f.metadata.hidden_conjugator =
                    matrix_from_json(meta.at("hidden_conjugator"));
        }
        return f;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed instance: ") + e.what());
    }
}

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError(std::string("cannot parse ") + path + ": " + e.what());
    }
    return instance_from_json(j);
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    out << dump_json(j);
    if (!out)
        throw IoError("write failed: " + path);
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

} // namespace jtri
