#include "grcup/cache.hpp"

#include <fstream>
#include <sstream>

#include "grcup/json_io.hpp"
#include "grcup/version.hpp"

namespace grcup {

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string checksum_hex(const nlohmann::ordered_json& payload) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << fnv1a64(payload.dump());
    return os.str();
}

nlohmann::ordered_json payload_json(std::int64_t n, const std::string& version,
                                    const std::vector<Polynomial>& polys) {
    nlohmann::ordered_json payload;
    payload["n"] = n;
    payload["engine_version"] = version;
    payload["polys"] = polys_to_json(polys);
    return payload;
}

}  // namespace

BasisCache::BasisCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path BasisCache::entry_path(std::int64_t n) const {
    return dir_ / ("gb_" + std::to_string(n) + ".json");
}

CacheLoad BasisCache::load(std::int64_t n) const {
    const std::filesystem::path path = entry_path(n);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return {CacheStatus::absent, std::nullopt};

    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheIoError("cannot open cache file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw CacheIoError("read failure on cache file " + path.string());

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception&) {
        return {CacheStatus::corrupt, std::nullopt};
    }

    std::vector<Polynomial> polys;
    std::string version;
    std::string stored_checksum;
    std::int64_t stored_n = -1;
    try {
        stored_n = doc.at("n").get<std::int64_t>();
        version = doc.at("engine_version").get<std::string>();
        stored_checksum = doc.at("checksum").get<std::string>();
        polys = polys_from_json(doc.at("polys"));
    } catch (const std::exception&) {
        return {CacheStatus::corrupt, std::nullopt};
    }
    if (stored_n != n) return {CacheStatus::corrupt, std::nullopt};
    if (checksum_hex(payload_json(stored_n, version, polys)) != stored_checksum)
        return {CacheStatus::corrupt, std::nullopt};
    if (version != kEngineVersion) return {CacheStatus::stale, std::nullopt};

    GroebnerBasis basis;
    basis.polys = std::move(polys);
    basis.provenance = Provenance::cache;
    basis.n = n;
    return {CacheStatus::hit, std::move(basis)};
}

void BasisCache::store(const GroebnerBasis& reduced) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw CacheIoError("cannot create cache directory " + dir_.string());

    nlohmann::ordered_json payload =
        payload_json(reduced.n, std::string(kEngineVersion), reduced.polys);
    const std::string checksum = checksum_hex(payload);
    payload["checksum"] = checksum;

    const std::filesystem::path path = entry_path(reduced.n);
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheIoError("cannot open cache file for writing: " + tmp.string());
        out << payload.dump() << '\n';
        out.flush();
        if (!out) throw CacheIoError("write failure on cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CacheIoError("cannot finalize cache file " + path.string());
}

}  // namespace grcup
