#ifndef SGMATCH_REDUCTIONS_HPP
#define SGMATCH_REDUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgmatch/graph.hpp"
#include "sgmatch/plain_graph.hpp"
#include "sgmatch/witness.hpp"

namespace sgmatch {

struct HPathInstance {
    PlainGraph graph;
    uint32_t h = 0;
};

// Universe elements are 0..universe_size-1; sets hold sorted distinct
// elements. File format uses 1-based ids.
struct SetCoverInstance {
    uint32_t universe_size = 0;
    std::vector<std::vector<uint32_t>> sets;
};

HPathInstance parse_hpath_instance(std::string_view text);
std::string serialize_hpath_instance(const HPathInstance& inst);
SetCoverInstance parse_setcover_instance(std::string_view text);
std::string serialize_setcover_instance(const SetCoverInstance& inst);

enum class ReductionKind : uint8_t {
    HPathUnit,   // distinct unit labels, one fresh query symbol per position
    HPathBinary, // binary alphabet, labels 0^h, h query blocks with a sliding 1
    SetCover,    // restricted matching with budget n-1 decides cover size < n
};

// Where each produced vertex came from, for witness mapping back.
struct VertexProvenance {
    enum class Role : uint8_t { Source, SetGadget, ElementGadget, Start };
    Role role = Role::Source;
    uint32_t index = 0; // source vertex / set index / element index
};

struct ReductionArtifact {
    ReductionKind kind = ReductionKind::HPathUnit;
    LabeledGraph graph;
    QueryString query;
    std::vector<VertexProvenance> provenance; // one per produced vertex

    // SetCover bookkeeping: produced ids for v0, each set, each element copy.
    VertexId start_vertex = 0;
    std::vector<VertexId> set_vertices;
    std::vector<std::vector<VertexId>> element_vertices; // [set][slot]
    SetCoverInstance source_cover;                       // kind == SetCover
    std::optional<HPathInstance> source_path;            // kind == HPath*
};

// Simple h-path -> compatibility on unit labels over h fresh symbols.
ReductionArtifact reduce_hpath_unit(const HPathInstance& inst);
// Simple h-path -> compatibility on alphabet {0,1}; every label is 0^h and
// query block t is 0^(t-1) 1 0^(h-t), so two blocks demand different symbols
// at one cell whenever their walk vertices coincide.
ReductionArtifact reduce_hpath_binary(const HPathInstance& inst);
// Set Cover -> restricted matching; covers of size c map to walks with c
// edited set vertices, query x 0 z y_1 x 0 z y_2 ... of length 3n.
ReductionArtifact reduce_setcover(const SetCoverInstance& inst);

// Maps a compatibility/matching witness back to the source problem, checking
// the correspondence on the way. Throws WitnessError when the walk does not
// decode.
std::vector<uint32_t> extract_hpath(const ReductionArtifact& art, const Walk& walk);
// Decodes + normalizes a restricted-matching witness of cost < n into a cover
// of size <= cost, per the rerouting argument: a block whose element vertex
// belongs to an unedited set is rerouted through the smallest edited set
// containing that element.
std::vector<uint32_t> extract_cover(const ReductionArtifact& art,
                                    const MatchWitness& witness);

} // namespace sgmatch

#endif
