#include "commgraph/group_io.hpp"

#include <fstream>

#include "commgraph/error.hpp"

namespace commgraph::grp {

namespace {

ff::Value parse_entry(const ff::FieldSpec& f, const nlohmann::json& e)
{
    if (e.is_number_integer()) return f.from_int(e.get<std::int64_t>());
    if (e.is_array()) {
        auto c = e.get<std::vector<std::int64_t>>();
        if (c.size() != f.degree()) throw Error(ErrorCode::Parse, "coefficient list has wrong length");
        std::vector<std::uint32_t> reduced;
        for (auto v : c) reduced.push_back(static_cast<std::uint32_t>(f.from_int(v)));
        return f.from_coeffs(reduced);
    }
    throw Error(ErrorCode::Parse, "matrix entry must be an integer or coefficient list");
}

GroupPtr parse(const nlohmann::json& j, std::size_t cap)
{
    const auto type = j.at("type").get<std::string>();
    const auto& gens_json = j.at("generators");
    if (!gens_json.is_array() || gens_json.empty()) throw Error(ErrorCode::Parse, "generators must be a nonempty array");
    std::vector<GroupElement> gens;
    if (type == "permutation") {
        const auto degree = j.at("degree").get<std::size_t>();
        for (const auto& g : gens_json) {
            auto images = g.get<std::vector<std::uint32_t>>();
            if (images.size() != degree) throw Error(ErrorCode::Parse, "generator length differs from degree");
            try {
                gens.emplace_back(Permutation(std::move(images)));
            } catch (const Error& e) {
                throw Error(ErrorCode::Parse, e.what());
            }
        }
    } else if (type == "matrix") {
        auto field = ff::FieldSpec::from_json(j.at("field"));
        const auto dim = j.at("dim").get<unsigned>();
        const auto aut_order = j.value("aut_order", field->degree());
        if (aut_order != field->degree()) {
            throw Error(ErrorCode::Parse, "aut_order must equal the field degree (beta is x -> x^p)");
        }
        for (const auto& g : gens_json) {
            const auto& rows = g.at("matrix");
            if (rows.size() != dim) throw Error(ErrorCode::Parse, "matrix row count differs from dim");
            ff::Matrix m(field, dim);
            for (unsigned r = 0; r < dim; ++r) {
                if (rows[r].size() != dim) throw Error(ErrorCode::Parse, "matrix column count differs from dim");
                for (unsigned c = 0; c < dim; ++c) m.set(r, c, parse_entry(*field, rows[r][c]));
            }
            if (m.determinant() == 0) throw Error(ErrorCode::Parse, "generator matrix is singular");
            gens.emplace_back(MatrixAutElement(std::move(m), g.value("twist", 0u)));
        }
    } else {
        throw Error(ErrorCode::Parse, "unknown group type '" + type + "'");
    }
    return GroupHandle::from_generators(std::move(gens), cap);
}

}  // namespace

GroupPtr group_from_json(const nlohmann::json& j, std::size_t cap)
{
    try {
        return parse(j, cap);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse || e.code() == ErrorCode::CapExceeded) throw;
        throw Error(ErrorCode::Parse, e.what());
    }
}

GroupPtr load_group_file(const std::filesystem::path& path, std::size_t cap)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
    }
    return group_from_json(j, cap);
}

nlohmann::json group_to_json(const GroupHandle& g)
{
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& e : g.generators()) gens.push_back(to_json(e));
    if (g.backend() == Backend::Permutation) {
        return {{"type", "permutation"},
                {"degree", std::get<Permutation>(g.generators().front()).degree()},
                {"generators", std::move(gens)}};
    }
    const auto& m = std::get<MatrixAutElement>(g.generators().front());
    return {{"type", "matrix"},
            {"field", m.field()->to_json()},
            {"dim", m.dim()},
            {"aut_order", m.aut_order()},
            {"generators", std::move(gens)}};
}

}  // namespace commgraph::grp
