#pragma once
// On-disk catalog store: a versioned directory of plain-text entry files,
// validated against the built-in generators.

#include "cy/catalog.hpp"
#include "cy/fit.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace cy {

struct StoreEntry {
    std::string id;
    std::string kind;
    std::string description;
    std::optional<ThetaOperator> op;
};

constexpr const char* kStoreVersionLine = "catalog-store version=1";

inline std::map<std::string, StoreEntry> read_store(
    const std::filesystem::path& dir) {
    std::ifstream vf(dir / "VERSION");
    std::string vline;
    if (!vf || !std::getline(vf, vline) || vline != kStoreVersionLine)
        throw std::invalid_argument("store: missing or unsupported VERSION at " +
                                    dir.string());
    std::map<std::string, StoreEntry> out;
    for (const auto& de : std::filesystem::directory_iterator(dir)) {
        if (de.path().extension() != ".entry") continue;
        std::ifstream in(de.path());
        StoreEntry e;
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("id=", 0) == 0) e.id = line.substr(3);
            else if (line.rfind("kind=", 0) == 0) e.kind = line.substr(5);
            else if (line.rfind("description=", 0) == 0)
                e.description = line.substr(12);
            else if (line.rfind("theta-operator", 0) == 0) {
                std::ostringstream rest;
                rest << line << "\n";
                while (std::getline(in, line)) rest << line << "\n";
                std::istringstream os(rest.str());
                e.op = read_operator(os);
                break;
            }
        }
        if (e.id.empty())
            throw std::invalid_argument("store: entry without id: " +
                                        de.path().string());
        out[e.id] = std::move(e);
    }
    return out;
}

// Every stored operator must annihilate its generator's first `terms`
// coefficients.  Returns the ids that fail (unknown id, missing operator
// where the built-in catalog has one, or failed annihilation).
inline std::vector<std::string> validate_store(
    const std::map<std::string, StoreEntry>& store, size_t terms = 20) {
    std::vector<std::string> bad;
    for (const auto& [id, e] : store) {
        auto it = catalog().find(id);
        if (it == catalog().end()) {
            bad.push_back(id);
            continue;
        }
        const CatalogEntry& c = it->second;
        if (c.op.has_value() != e.op.has_value()) {
            bad.push_back(id);
            continue;
        }
        if (e.op && c.gen && !verify(*e.op, c.gen(terms))) bad.push_back(id);
    }
    return bad;
}

inline void write_store(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream vf(dir / "VERSION");
        vf << kStoreVersionLine << "\n";
    }
    for (const auto& [id, e] : catalog()) {
        std::ofstream out(dir / (id + ".entry"));
        out << "id=" << e.id << "\n"
            << "kind=" << e.kind << "\n"
            << "description=" << e.description << "\n";
        if (e.op) write_operator(out, *e.op);
    }
}

}  // namespace cy
