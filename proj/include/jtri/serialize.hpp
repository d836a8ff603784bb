#pragma once

#include <string>

#include <json.hpp>

#include "jtri/algebra.hpp"
#include "jtri/identities.hpp"
#include "jtri/instance.hpp"
#include "jtri/spectral.hpp"
#include "jtri/subspace.hpp"
#include "jtri/triangularize.hpp"

namespace jtri {

using json = nlohmann::json;

// Complex numbers are always [re, im] pairs; matrices are
// {"dim": n, "entries": [[[re,im], ...], ...]} row-major. These formats
// are shared by every module and the CLI.

json to_json(const cplx& z);
cplx cplx_from_json(const json& j);

json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json to_json(const Subspace& s);
Subspace subspace_from_json(const json& j);

json to_json(const AlgebraBasis& b);

json to_json(const SpectralDecomposition& d);

json to_json(const IdentityReport& r);

json to_json(const SubspaceChain& c);

json to_json(const TriangularizationCertificate& c);

json to_json(const InstanceFile& f);
InstanceFile instance_from_json(const json& j);

/// Read/parse with IoError on failure.
InstanceFile load_instance(const std::string& path);
void save_json(const json& j, const std::string& path);
std::string dump_json(const json& j);

} // namespace jtri
