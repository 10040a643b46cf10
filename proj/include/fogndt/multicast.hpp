// Bit-level execution of the coded-multicast fronthaul protocol: split
// each file into M contiguous parts, cache part m at EN m, XOR adjacent
// parts into K(M-1) multicast messages, decode at every EN by walking the
// XOR chain outward from the cached part, and reconcile the measured
// fronthaul load with the analytical fronthaul NDT.

#pragma once

#include "fogndt/ndt.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace fogndt {

// Addresses part j of file i. Both indices are 1-based, as everywhere in
// this module; the M parts of a file partition it disjointly in order.
struct SubfileId {
    int file_index = 0; // i in [1, N]
    int part_index = 0; // j in [1, M]
};

// Raised when a chain message is missing or a reconstruction disagrees
// with the source bits.
struct DecodeError : std::runtime_error {
    SubfileId subfile;
    DecodeError(SubfileId id, const std::string& what)
        : std::runtime_error(what), subfile(id) {}
};

// One bit per element, values 0/1.
using BitString = std::vector<std::uint8_t>;

// The popular-file library. file_bits is the padded size actually split
// and transmitted; original_bits records the pre-padding request.
struct Library {
    int file_count = 0;
    int file_bits = 0;
    int original_bits = 0;
    std::vector<BitString> files;
};

// Seeded pseudorandom library of n_files, each file_bits long, padded
// with zero bits to the next multiple of part_count. Bit-identical for
// identical arguments on any platform.
Library make_library(int n_files, int file_bits, int part_count,
                     std::uint32_t seed);

// parts[i-1][j-1] is part j of file i; the M parts of a file are the
// contiguous equal-length segments that concatenate back to it.
struct SubfileTable {
    int part_count = 0; // M
    int part_bits = 0;  // L/M
    std::vector<std::vector<BitString>> parts;
};

// EN m holds part m of every file: N*L/M bits, exactly a 1/M cache share.
struct CacheContents {
    int en_index = 0;  // m, 1-based
    int part_count = 0;
    std::vector<BitString> stored; // stored[i-1] = part m of file i
};

struct SplitResult {
    SubfileTable table;
    std::vector<CacheContents> caches; // one per EN, index m-1
};

// Throws ValidationError when library.file_bits is not a multiple of
// en_count (pad via make_library first).
SplitResult split_and_cache(const Library& library, int en_count);

// payload = part chain_index XOR part chain_index+1 of file file_index.
struct FronthaulMessage {
    int file_index = 0;  // i, 1-based
    int chain_index = 0; // j in [1, M-1]
    BitString payload;   // L/M bits
};

// Messages for the distinct demanded files, ordered by (file, chain).
// Duplicate demand entries collapse (multicast serves them for free);
// a single EN means every file is fully cached and nothing is sent.
std::vector<FronthaulMessage> encode_fronthaul(
    const std::vector<int>& demand, const SubfileTable& table);

// Recover all M parts of every demanded file at one EN by XOR-chaining
// away from the cached part in both directions. Returns file -> parts.
// Throws DecodeError identifying the first missing chain message.
std::map<int, std::vector<BitString>> decode_at_en(
    const CacheContents& en, const std::vector<FronthaulMessage>& messages,
    const std::vector<int>& demand);

// Outcome of one simulated delivery. Field names match the JSON report.
struct DeliveryReport {
    std::vector<int> demand;
    long long fronthaul_bits = 0;
    double implied_delta_f = 0;            // fronthaul_bits / (L * r)
    std::vector<bool> per_en_reconstruction; // size M
    double edge_delta_e = 0;               // K / min{M,K}, accounting value
    int file_bits = 0;                     // padded L actually used
    int original_bits = 0;
};

inline bool all_reconstructed(const DeliveryReport& report) {
    for (bool ok : report.per_en_reconstruction)
        if (!ok) return false;
    return true;
}

// Draw user_count distinct demands from [1, file_count], seeded.
std::vector<int> draw_demand(int file_count, int user_count,
                             std::uint32_t seed);

// Full protocol run: seeded library, split/cache, encode, decode at every
// EN, bit-exact comparison against the source files. Requires
// cfg.cache_fraction == 1/M and r > 0; demand holds K indices in [1, N].
// file_bits pads up to a multiple of M. Identical inputs produce a
// bit-identical report.
DeliveryReport run_delivery(const NetworkConfig& cfg,
                            const std::vector<int>& demand,
                            std::uint32_t seed, int file_bits);

} // namespace fogndt
