#include "dmm/json_io.hpp"

#include <fstream>
#include <sstream>

namespace dmm {

Json toJson(const FiniteAlgebra& a) {
    const RawTables& raw = a.raw();
    Json doc = Json::object();
    if (raw.name) doc["name"] = *raw.name;
    doc["size"] = raw.size;
    doc["le"] = raw.le;
    doc["fusion"] = raw.fusion;
    doc["e"] = raw.e;
    if (raw.neg)
        doc["neg"] = *raw.neg;
    else
        doc["neg"] = nullptr;
    return doc;
}

FiniteAlgebra fromJson(const Json& doc) {
    if (!doc.is_object()) throw Error(ErrorKind::BadInput, "algebra document must be an object");
    RawTables raw;
    try {
        if (doc.contains("name") && !doc["name"].is_null()) raw.name = doc["name"].get<std::string>();
        raw.size = doc.at("size").get<int>();
        raw.le = doc.at("le").get<std::vector<std::vector<int>>>();
        raw.fusion = doc.at("fusion").get<std::vector<std::vector<Elem>>>();
        raw.e = doc.at("e").get<Elem>();
        if (doc.contains("neg") && !doc["neg"].is_null()) raw.neg = doc["neg"].get<std::vector<Elem>>();
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::BadInput, ex.what());
    }
    return FiniteAlgebra::validate(std::move(raw));
}

std::string dumpAlgebra(const FiniteAlgebra& a) { return toJson(a).dump() + "\n"; }

FiniteAlgebra parseAlgebra(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::BadInput, ex.what());
    }
    return fromJson(doc);
}

std::string readFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::BadInput, "cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

FiniteAlgebra loadAlgebra(const std::filesystem::path& path) { return parseAlgebra(readFile(path)); }

} // namespace dmm
