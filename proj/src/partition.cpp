#include "repulsion/partition.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>
#include <string>

namespace repulsion {

PartitionTable PartitionTable::build(unsigned bound, std::size_t max_index) {
  if (bound < 1) throw std::domain_error("partition table needs B >= 1");
  std::vector<BigInt> values(max_index + 1, BigInt(1));
  for (std::size_t b = 2; b <= bound; ++b)
    for (std::size_t n = b; n <= max_index; ++n) values[n] += values[n - b];
  return PartitionTable(bound, std::move(values));
}

PartitionTable PartitionTable::from_values(unsigned bound, std::vector<BigInt> values) {
  if (bound < 1) throw CertificationError("partition table needs B >= 1");
  if (values.empty()) throw CertificationError("partition table is empty");

  // Undo the DP layers from the top: divides the series by 1/(1-q^b).
  std::vector<BigInt> series = values;
  for (std::size_t b = bound; b >= 1; --b)
    for (std::size_t n = series.size(); n-- > b;) series[n] -= series[n - b];
  for (std::size_t n = 0; n < series.size(); ++n) {
    if (series[n] != (n == 0 ? 1 : 0)) {
      throw CertificationError("partition table for B=" + std::to_string(bound) +
                               " fails the product identity at n=" + std::to_string(n));
    }
  }
  return PartitionTable(bound, std::move(values));
}

PartitionTable PartitionTable::prefix(std::size_t max_index) const {
  if (max_index > this->max_index()) throw std::out_of_range("prefix beyond table");
  return PartitionTable(bound_, std::vector<BigInt>(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(max_index) + 1));
}

namespace {

std::mutex g_cache_mutex;
std::map<unsigned, std::shared_ptr<const PartitionTable>> g_tables;

BigInt count_parts(unsigned largest, unsigned remaining) {
  if (remaining == 0) return 1;
  BigInt total = 0;
  for (unsigned part = std::min(largest, remaining); part >= 1; --part) total += count_parts(part, remaining - part);
  return total;
}

// Partitions of `remaining` into at most `slots` parts, each <= largest.
BigInt count_by_length(unsigned largest, unsigned remaining, unsigned slots) {
  if (remaining == 0) return 1;
  if (slots == 0) return 0;
  BigInt total = 0;
  for (unsigned part = std::min(largest, remaining); part >= 1; --part)
    total += count_by_length(part, remaining - part, slots - 1);
  return total;
}

}  // namespace

std::shared_ptr<const PartitionTable> shared_table(unsigned bound, std::size_t max_index) {
  std::lock_guard lock(g_cache_mutex);
  auto& slot = g_tables[bound];
  if (!slot || slot->max_index() < max_index) {
    std::size_t target = slot ? std::max(max_index, 2 * slot->max_index()) : std::max<std::size_t>(max_index, 1024);
    slot = std::make_shared<const PartitionTable>(PartitionTable::build(bound, target));
  }
  return slot;
}

BigInt p_single(unsigned bound, std::size_t n) { return (*shared_table(bound, n))[n]; }

BigInt p_brute(unsigned bound, unsigned n) {
  if (n > kBruteForceLimit) throw std::domain_error("p_brute: n above the enumeration guard of 60");
  if (bound < 1) return n == 0 ? 1 : 0;
  return count_parts(bound, n);
}

BigInt p_brute_parts(unsigned max_parts, unsigned n) {
  if (n > kBruteForceLimit) throw std::domain_error("p_brute_parts: n above the enumeration guard of 60");
  return count_by_length(n, n, max_parts);
}

void write_table(const PartitionTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file " + path.string());
  out << table.bound() << ' ' << table.max_index() << '\n';
  for (const auto& v : table.values()) out << v.get_str() << '\n';
  if (!out) throw std::runtime_error("failed writing cache file " + path.string());
}

PartitionTable read_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache file " + path.string());
  std::string line;
  unsigned bound = 0;
  std::size_t max_index = 0;
  {
    if (!std::getline(in, line)) throw CertificationError("cache file " + path.string() + " has no header");
    std::istringstream header(line);
    if (!(header >> bound >> max_index)) throw CertificationError("cache file " + path.string() + " has a malformed header");
  }
  std::vector<BigInt> values;
  values.reserve(max_index + 1);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    BigInt v;
    if (v.set_str(line, 10) != 0) throw CertificationError("cache file " + path.string() + " has a non-decimal line");
    values.push_back(std::move(v));
  }
  if (values.size() != max_index + 1)
    throw CertificationError("cache file " + path.string() + " has " + std::to_string(values.size()) +
                             " values, header promises " + std::to_string(max_index + 1));
  return PartitionTable::from_values(bound, std::move(values));
}

std::filesystem::path cache_file_name(unsigned bound, std::size_t max_index) {
  return "pB_" + std::to_string(bound) + "_" + std::to_string(max_index) + ".txt";
}

PartitionTable load_or_build(unsigned bound, std::size_t max_index, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::optional<std::pair<std::size_t, fs::path>> best;
  if (fs::is_directory(dir)) {
    const std::regex pattern("pB_" + std::to_string(bound) + "_([0-9]+)\\.txt");
    for (const auto& entry : fs::directory_iterator(dir)) {
      std::smatch match;
      const std::string name = entry.path().filename().string();
      if (!std::regex_match(name, match, pattern)) continue;
      const std::size_t n = std::stoull(match[1].str());
      if (n >= max_index && (!best || n < best->first)) best = {n, entry.path()};
    }
  }
  if (best) {
    PartitionTable table = read_table(best->second);
    if (table.bound() != bound || table.max_index() != best->first)
      throw CertificationError("cache file " + best->second.string() + " header does not match its name");
    return table.max_index() == max_index ? table : table.prefix(max_index);
  }
  PartitionTable table = PartitionTable::build(bound, max_index);
  fs::create_directories(dir);
  write_table(table, dir / cache_file_name(bound, max_index));
  return table;
}

}  // namespace repulsion
