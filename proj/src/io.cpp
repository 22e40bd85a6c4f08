#include "genflag/io.hpp"

namespace genflag {

namespace {

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    require(it != j.end(), std::string("missing field: ") + key);
    return *it;
}

long int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    require(v.is_number_integer(), std::string("field is not an integer: ") + key);
    return v.get<long>();
}

} // namespace

Json matrix_to_json(const DenseMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

DenseMatrix matrix_from_json(const Json& j) {
    require(j.is_array(), "matrix must be an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows) {
        require(j[0].is_array(), "matrix row must be an array");
        cols = j[0].size();
    }
    DenseMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        require(j[r].is_array() && j[r].size() == cols, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& e = j[r][c];
            if (e.is_number_integer())
                m.at(r, c) = Rational(e.get<long>());
            else if (e.is_string())
                m.at(r, c) = parse_rational(e.get<std::string>());
            else
                throw bad_input("matrix entry must be an integer or a \"p/q\" string");
        }
    }
    return m;
}

Json interval_to_json(const IndexInterval& w) {
    return Json{{"lo", w.lo}, {"hi", w.hi}};
}

IndexInterval interval_from_json(const Json& j, const IndexSchema& ord) {
    require(j.is_object(), "window must be an object with lo/hi");
    return normalize_interval(ord, int_field(j, "lo"), int_field(j, "hi"));
}

Json schema_to_json(const FlagSchema& s) {
    Json j;
    j["index_kind"] = kind_name(s.index_schema.kind);
    if (s.index_schema.reversed) j["reversed"] = true;
    j["cut_family"] = s.family == CutFamily::EveryPosition ? "every_position" : "finite";
    if (s.family == CutFamily::FiniteCuts) j["cuts"] = s.cuts;
    return Json{{"schema", std::move(j)}};
}

FlagSchema schema_from_json(const Json& doc) {
    const Json& j = doc.contains("schema") ? doc["schema"] : doc;
    FlagSchema s;
    s.index_schema.kind = kind_from_name(field(j, "index_kind").get<std::string>());
    s.index_schema.reversed = j.value("reversed", false);
    std::string fam = field(j, "cut_family").get<std::string>();
    if (fam == "every_position") {
        s.family = CutFamily::EveryPosition;
    } else if (fam == "finite") {
        s.family = CutFamily::FiniteCuts;
        for (const Json& c : field(j, "cuts")) {
            require(c.is_number_integer(), "cut positions must be integers");
            s.cuts.push_back(c.get<long>());
        }
    } else {
        throw bad_input("unknown cut family: " + fam);
    }
    require_valid(s);
    return s;
}

Json operator_to_json(const StructuredOperator& f) {
    Json j;
    if (f.window) j["window"] = interval_to_json(*f.window);
    j["tail_shift"] = f.tail_shift;
    if (f.window) j["matrix"] = matrix_to_json(f.matrix);
    return Json{{"operator", std::move(j)}};
}

StructuredOperator operator_from_json(const Json& doc, const FlagSchema& s) {
    const Json& j = doc.contains("operator") ? doc["operator"] : doc;
    long tail = j.value("tail_shift", 0L);
    if (!j.contains("window")) {
        if (tail == 0) return identity_op(s);
        return shift_op(s, tail);
    }
    IndexInterval w = interval_from_json(field(j, "window"), s.index_schema);
    return make_operator(s, w, tail, matrix_from_json(field(j, "matrix")));
}

Json point_to_json(const FlagPoint& p) {
    Json j;
    j["window"] = interval_to_json(p.window);
    Json chain = Json::array();
    for (const auto& [prefix, sub] : p.chain)
        chain.push_back(Json{{"prefix", prefix}, {"basis", matrix_to_json(sub.basis())}});
    j["chain"] = std::move(chain);
    return Json{{"point", std::move(j)}};
}

FlagPoint point_from_json(const Json& doc, const FlagSchema& s) {
    const Json& j = doc.contains("point") ? doc["point"] : doc;
    FlagPoint p;
    p.schema = s;
    p.window = interval_from_json(field(j, "window"), s.index_schema);
    std::size_t n = p.window.size(s.index_schema);
    for (const Json& entry : field(j, "chain")) {
        long prefix = int_field(entry, "prefix");
        Subspace sub = Subspace::span(n, matrix_from_json(field(entry, "basis")));
        p.chain.emplace_back(prefix, std::move(sub));
    }
    validate_point(p);
    return p;
}

Json parse_document(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    require(!j.is_discarded(), "document is not valid JSON");
    return j;
}

} // namespace genflag
