#include "mink/io.hpp"

#include "mink/error.hpp"

#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace mink {

using nlohmann::json;

std::string format_double(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void write_file_atomic(const std::string& path, const std::string& content)
{
    if (path.empty()) throw Error(ErrorCode::IoError, "empty output path");
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw Error(ErrorCode::IoError, "write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorCode::IoError, "cannot move output into place at '" + path + "'");
    }
}

std::string read_file(const std::string& path)
{
    if (path.empty()) throw Error(ErrorCode::IoError, "empty input path");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<MinkVec3d> read_curve_json(const std::string& path)
{
    const std::string text = read_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::IoError, "'" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
        throw Error(ErrorCode::IoError, "'" + path + "' has no \"points\" array");
    }
    if (doc.contains("closed") && !(doc["closed"].is_boolean() && doc["closed"].get<bool>())) {
        throw Error(ErrorCode::InvalidArgument, "only closed curves are supported");
    }
    std::vector<MinkVec3d> pts;
    pts.reserve(doc["points"].size());
    for (const auto& p : doc["points"]) {
        if (!p.is_array() || p.size() != 3 || !p[0].is_number() || !p[1].is_number() || !p[2].is_number()) {
            throw Error(ErrorCode::IoError, "'" + path + "': every point must be [x1, x2, x3]");
        }
        pts.emplace_back(p[0].get<double>(), p[1].get<double>(), p[2].get<double>());
    }
    return pts;
}

std::string curve_json(const std::vector<MinkVec3d>& points)
{
    json doc;
    doc["closed"] = true;
    json arr = json::array();
    for (const auto& p : points) arr.push_back({p(0), p(1), p(2)});
    doc["points"] = std::move(arr);
    return doc.dump() + "\n";
}

void write_curve_json(const std::string& path, const std::vector<MinkVec3d>& points)
{
    write_file_atomic(path, curve_json(points));
}

void write_obj(const std::string& path, const ObjMesh& mesh)
{
    std::string out;
    out.reserve(mesh.vertices.size() * 64 + mesh.faces.size() * 24);
    for (const auto& v : mesh.vertices) {
        out += "v ";
        out += format_double(v(0));
        out += ' ';
        out += format_double(v(1));
        out += ' ';
        out += format_double(v(2));
        out += '\n';
    }
    for (const auto& f : mesh.faces) {
        out += "f " + std::to_string(f[0] + 1) + ' ' + std::to_string(f[1] + 1) + ' ' + std::to_string(f[2] + 1) + '\n';
    }
    write_file_atomic(path, out);
}

ObjMesh read_obj(const std::string& path)
{
    const std::string text = read_file(path);
    ObjMesh mesh;
    std::istringstream lines(text);
    std::string line;
    auto parse = [&](std::string_view tok) {
        double x = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), x);
        if (res.ec != std::errc()) throw Error(ErrorCode::IoError, "bad number '" + std::string(tok) + "' in " + path);
        return x;
    };
    while (std::getline(lines, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            std::string a, b, c;
            ls >> a >> b >> c;
            mesh.vertices.emplace_back(parse(a), parse(b), parse(c));
        } else if (tag == "f") {
            std::array<int, 3> f{};
            for (int& i : f) {
                std::string tok;
                ls >> tok;
                i = std::stoi(tok.substr(0, tok.find('/'))) - 1;
            }
            mesh.faces.push_back(f);
        }
    }
    return mesh;
}

} // namespace mink
