#include <string_view>

#include "tdframe/error.hpp"
#include "tdframe/serialize.hpp"
#include "tdframe/srg.hpp"

namespace tdframe {
namespace {

// Complement of the folded 5-cube; identical to data/clebsch_complement.json.
constexpr std::string_view kClebschComplement =
    R"({"v":16,"edges":[[0,3],[0,5],[0,6],[0,7],[0,9],[0,10],[0,11],[0,12],[0,13],[0,14],)"
    R"([1,2],[1,4],[1,6],[1,7],[1,8],[1,10],[1,11],[1,12],[1,13],[1,15],[2,4],[2,5],[2,7],)"
    R"([2,8],[2,9],[2,11],[2,12],[2,14],[2,15],[3,4],[3,5],[3,6],[3,8],[3,9],[3,10],[3,13],)"
    R"([3,14],[3,15],[4,7],[4,8],[4,9],[4,10],[4,13],[4,14],[4,15],[5,6],[5,8],[5,9],[5,11],)"
    R"([5,12],[5,14],[5,15],[6,8],[6,10],[6,11],[6,12],[6,13],[6,15],[7,9],[7,10],[7,11],)"
    R"([7,12],[7,13],[7,14],[8,11],[8,13],[8,14],[8,15],[9,10],[9,12],[9,14],[9,15],[10,12],)"
    R"([10,13],[10,15],[11,12],[11,13],[11,14],[12,15],[13,14]]})";

}  // namespace

SrgGraph clebsch_complement() {
  SrgGraph g = SrgGraph::from_adjacency(parse_graph_json(kClebschComplement));
  if (g.params() != SrgParams{16, 10, 6, 6})
    throw CertificateMismatch("Clebsch complement fixture has params " + to_string(g.params()));
  return g;
}

}  // namespace tdframe
