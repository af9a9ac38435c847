#include "mintest/generator.hpp"

#include <string>
#include <unordered_set>
#include <vector>

#include "mintest/errors.hpp"

namespace mintest {
namespace {
constexpr std::size_t max_redraws_per_row = 10000;
}

BooleanMatrix generate_matrix(const GeneratorConfig& config) {
    if (config.rows < 2) throw InputError("generator needs at least 2 rows");
    if (config.cols < 1) throw InputError("generator needs at least 1 column");
    if (!(config.ones_density > 0.0 && config.ones_density < 1.0))
        throw InputError("ones density must lie strictly between 0 and 1");
    if (config.cols < 63 && config.rows > (std::size_t{1} << config.cols))
        throw InputError(std::to_string(config.rows) + " distinct rows do not exist with " +
                         std::to_string(config.cols) + " columns");

    SplitMix64 rng(config.seed);
    std::vector<std::string> rows;
    std::unordered_set<std::string> seen;
    rows.reserve(config.rows);
    for (std::size_t r = 0; r < config.rows; ++r) {
        std::size_t attempts = 0;
        while (true) {
            std::string row(config.cols, '0');
            for (auto& cell : row)
                if (rng.next_unit() < config.ones_density) cell = '1';
            if (seen.insert(row).second) {
                rows.push_back(std::move(row));
                break;
            }
            if (++attempts >= max_redraws_per_row)
                throw InputError("could not draw " + std::to_string(config.rows) + " distinct rows");
        }
    }
    return BooleanMatrix::from_strings(rows);
}

} // namespace mintest
