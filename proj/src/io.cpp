#include <maxplus/io.hpp>

#include <fstream>
#include <utility>

#include <maxplus/errors.hpp>

namespace maxplus::io {

ExtReal entry_from_json(const json& j) {
    if (j.is_number_unsigned()) {
        const auto v = j.get<unsigned long long>();
        return ExtReal(Rat(mpz_class(static_cast<unsigned long>(v))));
    }
    if (j.is_number_integer()) {
        const auto v = j.get<long long>();
        return ExtReal(Rat(mpz_class(static_cast<long>(v))));
    }
    if (j.is_number_float())
        throw ParseError("floating-point entry '" + j.dump() + "' not allowed; use \"p/q\"");
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "-inf") return ExtReal::bottom();
        return ExtReal(parse_rational(s));
    }
    throw ParseError("entry must be an integer, \"p/q\", or \"-inf\", got " + j.dump());
}

json entry_to_json(const ExtReal& v) {
    if (v.is_bottom()) return "-inf";
    const Rat& r = v.value();
    if (r.get_den() == 1 && r.get_num().fits_slong_p())
        return static_cast<std::int64_t>(r.get_num().get_si());
    return to_string(r);
}

TropMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix document needs fields rows, cols, entries");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw ParseError("matrix rows/cols must be integers");
    const long long rows = j["rows"].get<long long>();
    const long long cols = j["cols"].get<long long>();
    if (rows < 1 || cols < 1 || rows > 100000 || cols > 100000)
        throw ParseError("matrix rows/cols out of range");
    const json& entries = j["entries"];
    if (!entries.is_array() || static_cast<long long>(entries.size()) != rows)
        throw ParseError("matrix entries must hold exactly 'rows' rows");
    TropMatrix A(static_cast<int>(rows), static_cast<int>(cols));
    for (int i = 0; i < A.rows(); ++i) {
        const json& row = entries[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<long long>(row.size()) != cols)
            throw ParseError("matrix row " + std::to_string(i + 1) +
                             " must hold exactly 'cols' entries");
        for (int k = 0; k < A.cols(); ++k)
            A.set(i, k, entry_from_json(row[static_cast<std::size_t>(k)]));
    }
    return A;
}

json matrix_to_json(const TropMatrix& A) {
    json rows = json::array();
    for (int i = 0; i < A.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < A.cols(); ++j) row.push_back(entry_to_json(A.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", A.rows()}, {"cols", A.cols()}, {"entries", std::move(rows)}};
}

namespace {

Rat finite_entry_from_json(const json& j, const char* what) {
    const ExtReal v = entry_from_json(j);
    if (v.is_bottom()) throw ParseError(std::string(what) + " must be finite");
    return v.value();
}

}  // namespace

IntervalSystem intervals_from_json(const json& j) {
    if (!j.is_object() || !j.contains("intervals"))
        throw ParseError("interval document needs field intervals");
    const json& arr = j["intervals"];
    if (!arr.is_array()) throw ParseError("intervals must be an array");
    // Emptiness and ordering are domain invariants: IntervalSystem reports them.
    std::vector<std::pair<Rat, Rat>> iv;
    iv.reserve(arr.size());
    for (const json& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError("each interval must be a [lower, upper] pair");
        iv.emplace_back(finite_entry_from_json(pair[0], "interval endpoint"),
                        finite_entry_from_json(pair[1], "interval endpoint"));
    }
    return IntervalSystem(std::move(iv));  // invariant violations throw invalid_argument
}

json intervals_to_json(const IntervalSystem& sys) {
    json arr = json::array();
    for (int i = 0; i < sys.count(); ++i)
        arr.push_back(json::array({entry_to_json(ExtReal(sys.lower(i))),
                                   entry_to_json(ExtReal(sys.upper(i)))}));
    return json{{"intervals", std::move(arr)}};
}

namespace {

std::vector<std::vector<Rat>> grid_from_json(const json& j, const char* field) {
    if (!j.contains(field)) throw ParseError(std::string("instance document needs field ") + field);
    const json& rows = j[field];
    if (!rows.is_array() || rows.empty())
        throw ParseError(std::string(field) + " must be a nonempty array of rows");
    std::vector<std::vector<Rat>> grid;
    grid.reserve(rows.size());
    for (const json& row : rows) {
        if (!row.is_array()) throw ParseError(std::string(field) + " rows must be arrays");
        std::vector<Rat> r;
        r.reserve(row.size());
        for (const json& e : row) r.push_back(finite_entry_from_json(e, "duration"));
        grid.push_back(std::move(r));
    }
    return grid;
}

}  // namespace

ScheduleInstance instance_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("instance document must be a JSON object");
    return ScheduleInstance(grid_from_json(j, "durations_a"), grid_from_json(j, "durations_b"));
}

json instance_to_json(const ScheduleInstance& inst) {
    auto grid = [&](bool first) {
        json rows = json::array();
        for (int i = 0; i < inst.products(); ++i) {
            json row = json::array();
            for (int k = 0; k < inst.machines(); ++k)
                row.push_back(entry_to_json(ExtReal(first ? inst.a(i, k) : inst.b(i, k))));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    return json{{"durations_a", grid(true)}, {"durations_b", grid(false)}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << j.dump(2) << '\n';
}

TropMatrix read_matrix_file(const std::string& path) { return matrix_from_json(read_json_file(path)); }

void write_matrix_file(const std::string& path, const TropMatrix& A) {
    write_json_file(path, matrix_to_json(A));
}

IntervalSystem read_intervals_file(const std::string& path) {
    return intervals_from_json(read_json_file(path));
}

ScheduleInstance read_instance_file(const std::string& path) {
    return instance_from_json(read_json_file(path));
}

}  // namespace maxplus::io
