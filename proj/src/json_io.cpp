#include "pyra/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pyra {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_text(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw io_error(std::string("parse error: ") + e.what());
    }
}

const ordered_json& require(const ordered_json& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end()) throw io_error(std::string("missing field \"") + field + "\"");
    return *it;
}

int require_int(const ordered_json& j, const char* field) {
    const auto& f = require(j, field);
    if (!f.is_number_integer()) throw io_error(std::string("field \"") + field + "\" must be an integer");
    return f.get<int>();
}

std::vector<int> int_array(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) throw io_error("field \"" + where + "\" must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw io_error("field \"" + where + "\" must hold integers");
        out.push_back(e.get<int>());
    }
    return out;
}

ordered_json design_to_value(const Design& d) {
    ordered_json blocks = ordered_json::array();
    for (const auto& b : d.blocks()) blocks.push_back(b.points());
    return ordered_json{{"v", d.v()}, {"blocks", std::move(blocks)}};
}

Design design_from_value(const ordered_json& j, const std::string& where) {
    if (!j.is_object()) throw io_error("field \"" + where + "\" must be an object");
    int v = require_int(j, "v");
    const auto& jb = require(j, "blocks");
    if (!jb.is_array()) throw io_error("field \"" + where + ".blocks\" must be an array");
    try {
        std::vector<Block> blocks;
        blocks.reserve(jb.size());
        for (std::size_t i = 0; i < jb.size(); ++i)
            blocks.push_back(Block::from_points(v, int_array(jb[i], where + ".blocks[" + std::to_string(i) + "]")));
        return Design(v, std::move(blocks));
    } catch (const io_error&) {
        throw;
    } catch (const std::exception& e) {
        throw io_error("field \"" + where + "\": " + e.what());
    }
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw io_error("cannot open " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot write " + file.string());
    out << text << '\n';
    if (!out) throw io_error("write failed for " + file.string());
}

Block block_from_points(int v, const std::vector<int>& pts, const std::string& where) {
    try {
        return Block::from_points(v, pts);
    } catch (const std::exception& e) {
        throw io_error("field \"" + where + "\": " + e.what());
    }
}

}  // namespace

std::string design_to_json(const Design& d) { return design_to_value(d).dump(2); }

Design design_from_json(const std::string& text) {
    return design_from_value(parse_text(text), "design");
}

Design load_design(const std::filesystem::path& file) { return design_from_json(read_file(file)); }

void save_design(const Design& d, const std::filesystem::path& file) {
    write_file(file, design_to_json(d));
}

std::string witness_to_json(const DecompositionWitness& w) {
    ordered_json delta = ordered_json::array();
    for (const auto& [i, j] : w.delta) delta.push_back(ordered_json::array({i, j}));
    ordered_json j{{"O", w.center.points()},
                   {"Z", w.z.points()},
                   {"designO", design_to_value(w.design_o)},
                   {"designZ", design_to_value(w.design_z)},
                   {"delta", std::move(delta)}};
    return j.dump(2);
}

DecompositionWitness witness_from_json(const std::string& text) {
    ordered_json j = parse_text(text);
    if (!j.is_object()) throw io_error("witness file must hold an object");
    auto o_pts = int_array(require(j, "O"), "O");
    auto z_pts = int_array(require(j, "Z"), "Z");
    if (o_pts.empty()) throw io_error("field \"O\" must not be empty");
    int v = 2 * static_cast<int>(o_pts.size()) - 1;

    Block center = block_from_points(v, o_pts, "O");
    Block z = block_from_points(v, z_pts, "Z");
    Block missing = center ^ (center & z);
    if (!z.subset_of(center) || missing.size() != 1)
        throw io_error("field \"Z\" must omit exactly one point of \"O\"");
    int p_prime = missing.min_point();
    Design design_o = design_from_value(require(j, "designO"), "designO");
    Design design_z = design_from_value(require(j, "designZ"), "designZ");

    const auto& jd = require(j, "delta");
    if (!jd.is_array()) throw io_error("field \"delta\" must be an array");
    std::vector<std::pair<int, int>> delta;
    for (std::size_t i = 0; i < jd.size(); ++i) {
        auto pair = int_array(jd[i], "delta[" + std::to_string(i) + "]");
        if (pair.size() != 2) throw io_error("field \"delta[" + std::to_string(i) + "]\" must hold two indices");
        delta.emplace_back(pair[0], pair[1]);
    }
    std::sort(delta.begin(), delta.end());
    return DecompositionWitness{v,        center,  z, p_prime, std::move(design_o),
                                std::move(design_z), std::move(delta)};
}

DecompositionWitness load_witness(const std::filesystem::path& file) {
    return witness_from_json(read_file(file));
}

void save_witness(const DecompositionWitness& w, const std::filesystem::path& file) {
    write_file(file, witness_to_json(w));
}

std::string group_to_json(int v, const std::vector<Permutation>& elements) {
    ordered_json els = ordered_json::array();
    for (const auto& g : elements) {
        std::vector<int> images(static_cast<std::size_t>(v));
        for (int p = 0; p < v; ++p) images[static_cast<std::size_t>(p)] = g(p);
        els.push_back(std::move(images));
    }
    return ordered_json{{"v", v}, {"elements", std::move(els)}}.dump(2);
}

std::pair<int, std::vector<Permutation>> group_from_json(const std::string& text) {
    ordered_json j = parse_text(text);
    if (!j.is_object()) throw io_error("group file must hold an object");
    int v = require_int(j, "v");
    const auto& je = require(j, "elements");
    if (!je.is_array()) throw io_error("field \"elements\" must be an array");
    std::vector<Permutation> elements;
    elements.reserve(je.size());
    for (std::size_t i = 0; i < je.size(); ++i) {
        auto images = int_array(je[i], "elements[" + std::to_string(i) + "]");
        if (static_cast<int>(images.size()) != v)
            throw io_error("field \"elements[" + std::to_string(i) + "]\" must list " + std::to_string(v) +
                           " images");
        try {
            elements.emplace_back(std::move(images));
        } catch (const std::exception& e) {
            throw io_error("field \"elements[" + std::to_string(i) + "]\": " + e.what());
        }
    }
    return {v, std::move(elements)};
}

std::string certificate_to_json(const PyramidalCertificate& cert) {
    int v = cert.fixed_set.v();
    ordered_json els = ordered_json::array();
    for (const auto& g : cert.elements) {
        std::vector<int> images(static_cast<std::size_t>(v));
        for (int p = 0; p < v; ++p) images[static_cast<std::size_t>(p)] = g(p);
        els.push_back(std::move(images));
    }
    ordered_json j{{"v", v}, {"fixed", cert.fixed_set.points()}, {"elements", std::move(els)}};
    return j.dump(2);
}

PyramidalCertificate certificate_from_json(const std::string& text) {
    ordered_json j = parse_text(text);
    if (!j.is_object()) throw io_error("certificate file must hold an object");
    int v = require_int(j, "v");
    Block fixed = block_from_points(v, int_array(require(j, "fixed"), "fixed"), "fixed");
    auto [gv, elements] = group_from_json(text);
    (void)gv;
    try {
        return make_certificate(fixed, std::move(elements));
    } catch (const std::exception& e) {
        throw io_error(std::string("certificate does not verify: ") + e.what());
    }
}

PyramidalCertificate load_certificate(const std::filesystem::path& file) {
    return certificate_from_json(read_file(file));
}

void save_certificate(const PyramidalCertificate& cert, const std::filesystem::path& file) {
    write_file(file, certificate_to_json(cert));
}

std::string content_digest(const std::string& canonical_text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : canonical_text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string design_digest(const Design& d) { return content_digest(design_to_json(d)); }

std::string RunReport::to_json() const {
    ordered_json jc = ordered_json::array();
    for (const auto& c : checks.checks)
        jc.push_back(ordered_json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    ordered_json j{{"command", command},
                   {"inputs", inputs},
                   {"checks", std::move(jc)},
                   {"timing_seconds", timing_seconds},
                   {"ok", ok()}};
    return j.dump(2);
}

Catalog::Catalog(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::vector<CatalogEntry> Catalog::entries() const {
    std::vector<CatalogEntry> out;
    if (!std::filesystem::exists(index_file())) return out;
    ordered_json j = parse_text(read_file(index_file()));
    const auto& je = require(j, "entries");
    if (!je.is_array()) throw io_error("field \"entries\" must be an array");
    for (const auto& e : je) {
        CatalogEntry entry;
        entry.id = require(e, "id").get<std::string>();
        entry.file = require(e, "file").get<std::string>();
        entry.parameters = {require_int(e, "v"), require_int(e, "k"), require_int(e, "lambda")};
        for (const auto& t : require(e, "tags")) entry.tags.push_back(t.get<std::string>());
        entry.provenance = require(e, "provenance").get<std::string>();
        out.push_back(std::move(entry));
    }
    return out;
}

CatalogEntry Catalog::add(const Design& d, const std::vector<std::string>& tags,
                          const std::string& provenance) {
    DesignParams params = design_params(d);
    std::string canonical = design_to_json(d);
    CatalogEntry entry;
    entry.id = content_digest(canonical);
    entry.file = entry.id + ".json";
    entry.parameters = params;
    entry.tags = tags;
    entry.provenance = provenance;

    write_file(dir_ / entry.file, canonical);

    auto all = entries();
    auto it = std::find_if(all.begin(), all.end(),
                           [&](const CatalogEntry& e) { return e.id == entry.id; });
    if (it != all.end()) {
        // union of old and new tags, most recent provenance wins
        std::vector<std::string> merged = it->tags;
        merged.insert(merged.end(), tags.begin(), tags.end());
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        entry.tags = std::move(merged);
        *it = entry;
    } else {
        all.push_back(entry);
    }
    std::sort(all.begin(), all.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });

    ordered_json je = ordered_json::array();
    for (const auto& e : all)
        je.push_back(ordered_json{{"id", e.id},
                                  {"file", e.file},
                                  {"v", e.parameters.v},
                                  {"k", e.parameters.k},
                                  {"lambda", e.parameters.lambda},
                                  {"tags", e.tags},
                                  {"provenance", e.provenance}});
    write_file(index_file(), ordered_json{{"entries", std::move(je)}}.dump(2));
    return entry;
}

}  // namespace pyra
