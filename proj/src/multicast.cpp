#include "fogndt/multicast.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace fogndt {

namespace {

std::vector<int> distinct_sorted(const std::vector<int>& demand) {
    std::set<int> uniq(demand.begin(), demand.end());
    return {uniq.begin(), uniq.end()};
}

void check_demand_indices(const std::vector<int>& demand, int file_count) {
    for (int i : demand)
        if (i < 1 || i > file_count)
            throw ValidationError("demand index " + std::to_string(i) +
                                  " outside [1, " + std::to_string(file_count) +
                                  "]");
}

BitString xor_bits(const BitString& a, const BitString& b) {
    BitString out(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) out[t] = a[t] ^ b[t];
    return out;
}

} // namespace

Library make_library(int n_files, int file_bits, int part_count,
                     std::uint32_t seed) {
    if (n_files < 1) throw ValidationError("library needs at least one file");
    if (file_bits < 1) throw ValidationError("file size must be positive");
    if (part_count < 1) throw ValidationError("part count must be positive");
    Library lib;
    lib.file_count = n_files;
    lib.original_bits = file_bits;
    lib.file_bits =
        ((file_bits + part_count - 1) / part_count) * part_count;
    // mt19937 output is fully specified, so the bit stream is portable.
    std::mt19937 rng(seed);
    lib.files.resize(n_files);
    for (BitString& file : lib.files) {
        file.assign(lib.file_bits, 0);
        for (int t = 0; t < file_bits; ++t)
            file[t] = static_cast<std::uint8_t>(rng() & 1u);
    }
    return lib;
}

SplitResult split_and_cache(const Library& library, int en_count) {
    if (en_count < 1) throw ValidationError("en_count must be >= 1");
    if (library.file_bits % en_count != 0)
        throw ValidationError(
            "file size " + std::to_string(library.file_bits) +
            " bits is not a multiple of " + std::to_string(en_count) +
            " parts; pad the library first (make_library pads automatically)");
    SplitResult out;
    const int part_bits = library.file_bits / en_count;
    out.table.part_count = en_count;
    out.table.part_bits = part_bits;
    out.table.parts.resize(library.file_count);
    for (int i = 0; i < library.file_count; ++i) {
        out.table.parts[i].resize(en_count);
        for (int j = 0; j < en_count; ++j) {
            const auto begin = library.files[i].begin() +
                               static_cast<std::ptrdiff_t>(j) * part_bits;
            out.table.parts[i][j] = BitString(begin, begin + part_bits);
        }
    }
    out.caches.resize(en_count);
    for (int m = 1; m <= en_count; ++m) {
        CacheContents& cache = out.caches[m - 1];
        cache.en_index = m;
        cache.part_count = en_count;
        cache.stored.reserve(library.file_count);
        for (int i = 0; i < library.file_count; ++i)
            cache.stored.push_back(out.table.parts[i][m - 1]);
    }
    return out;
}

std::vector<FronthaulMessage> encode_fronthaul(const std::vector<int>& demand,
                                               const SubfileTable& table) {
    check_demand_indices(demand, static_cast<int>(table.parts.size()));
    std::vector<FronthaulMessage> messages;
    if (table.part_count < 2) return messages;
    const std::vector<int> files = distinct_sorted(demand);
    messages.reserve(files.size() * (table.part_count - 1));
    for (int i : files) {
        const auto& parts = table.parts[i - 1];
        for (int j = 1; j <= table.part_count - 1; ++j)
            messages.push_back({i, j, xor_bits(parts[j - 1], parts[j])});
    }
    return messages;
}

std::map<int, std::vector<BitString>> decode_at_en(
    const CacheContents& en, const std::vector<FronthaulMessage>& messages,
    const std::vector<int>& demand) {
    check_demand_indices(demand, static_cast<int>(en.stored.size()));
    std::map<std::pair<int, int>, const BitString*> received;
    for (const FronthaulMessage& msg : messages)
        received[{msg.file_index, msg.chain_index}] = &msg.payload;

    const auto chain_payload = [&](int file, int j) -> const BitString& {
        const auto it = received.find({file, j});
        if (it == received.end())
            throw DecodeError({file, j},
                              "missing fronthaul message for file " +
                                  std::to_string(file) + ", chain link " +
                                  std::to_string(j));
        return *it->second;
    };

    const int m = en.en_index;
    std::map<int, std::vector<BitString>> recovered;
    for (int i : distinct_sorted(demand)) {
        std::vector<BitString> parts(en.part_count);
        parts[m - 1] = en.stored[i - 1];
        // F_{i,j} = F_{i,j+1} xor (F_{i,j} xor F_{i,j+1}), walking down,
        // and symmetrically walking up from the cached part.
        for (int j = m - 1; j >= 1; --j)
            parts[j - 1] = xor_bits(parts[j], chain_payload(i, j));
        for (int j = m; j <= en.part_count - 1; ++j)
            parts[j] = xor_bits(parts[j - 1], chain_payload(i, j));
        recovered.emplace(i, std::move(parts));
    }
    return recovered;
}

std::vector<int> draw_demand(int file_count, int user_count,
                             std::uint32_t seed) {
    if (user_count > file_count)
        throw ValidationError("cannot draw " + std::to_string(user_count) +
                              " distinct demands from " +
                              std::to_string(file_count) + " files");
    std::vector<int> pool(file_count);
    for (int i = 0; i < file_count; ++i) pool[i] = i + 1;
    std::mt19937 rng(seed);
    std::vector<int> demand;
    demand.reserve(user_count);
    for (int i = 0; i < user_count; ++i) {
        const int j = i + static_cast<int>(rng() % (pool.size() - i));
        std::swap(pool[i], pool[j]);
        demand.push_back(pool[i]);
    }
    return demand;
}

DeliveryReport run_delivery(const NetworkConfig& cfg,
                            const std::vector<int>& demand,
                            std::uint32_t seed, int file_bits) {
    validate(cfg);
    if (cfg.cache_fraction != 1.0 / cfg.en_count)
        throw PreconditionError(
            "coded multicasting runs at mu = 1/M = " +
            std::to_string(1.0 / cfg.en_count) + ", got mu = " +
            std::to_string(cfg.cache_fraction));
    if (cfg.fronthaul_rate <= 0.0)
        throw PreconditionError("delivery needs fronthaul_rate > 0");
    if (static_cast<int>(demand.size()) != cfg.user_count)
        throw ValidationError("demand must list one file per user, expected " +
                              std::to_string(cfg.user_count) + " got " +
                              std::to_string(demand.size()));
    check_demand_indices(demand, cfg.file_count);

    const Library lib =
        make_library(cfg.file_count, file_bits, cfg.en_count, seed);
    const SplitResult split = split_and_cache(lib, cfg.en_count);
    const std::vector<FronthaulMessage> messages =
        encode_fronthaul(demand, split.table);

    DeliveryReport report;
    report.demand = demand;
    report.file_bits = lib.file_bits;
    report.original_bits = lib.original_bits;
    for (const FronthaulMessage& msg : messages)
        report.fronthaul_bits += static_cast<long long>(msg.payload.size());
    report.implied_delta_f =
        report.fronthaul_bits == 0
            ? 0.0
            : static_cast<double>(report.fronthaul_bits) /
                  (static_cast<double>(lib.file_bits) * cfg.fronthaul_rate);
    report.edge_delta_e = static_cast<double>(cfg.user_count) / min_mk(cfg);

    report.per_en_reconstruction.resize(cfg.en_count, false);
    for (int m = 1; m <= cfg.en_count; ++m) {
        bool ok = true;
        try {
            const auto recovered =
                decode_at_en(split.caches[m - 1], messages, demand);
            for (const auto& [file, parts] : recovered) {
                BitString assembled;
                assembled.reserve(lib.file_bits);
                for (const BitString& part : parts)
                    assembled.insert(assembled.end(), part.begin(), part.end());
                if (assembled != lib.files[file - 1]) {
                    ok = false;
                    break;
                }
            }
        } catch (const DecodeError&) {
            ok = false;
        }
        report.per_en_reconstruction[m - 1] = ok;
    }
    return report;
}

} // namespace fogndt
