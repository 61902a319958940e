#ifndef SHACHOM_DENDROGRAM_IO_HPP
#define SHACHOM_DENDROGRAM_IO_HPP

#include <filesystem>
#include <string>

#include "shachom/cluster.hpp"

namespace shachom {

/// Serializes a dendrogram to the versioned JSON schema (see
/// docs/formats.md). Doubles are printed with 17 significant digits; output
/// bytes are a pure function of the inputs. `config_json` is embedded
/// verbatim under "config" ("{}" when absent).
std::string dendrogram_to_json(const Dendrogram& dg,
                               const std::string& config_json = "{}");

void write_dendrogram_json(const Dendrogram& dg, const std::filesystem::path& path,
                           const std::string& config_json = "{}");

/// Newick form of the merge tree with branch lengths derived from merge
/// heights, for third-party dendrogram viewers. Leaves are named by
/// instance index; with final_k > 1 the remaining roots are joined under a
/// zero-length virtual root so the output is one tree.
std::string dendrogram_to_newick(const Dendrogram& dg);

void write_newick(const Dendrogram& dg, const std::filesystem::path& path);

} // namespace shachom

#endif
