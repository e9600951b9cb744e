#include "addbasis/presets.hpp"

#include "addbasis/segments.hpp"

namespace addbasis {

std::vector<std::string> preset_names() { return {"simple", "mrose7", "klove7", "kohonen42"}; }

std::optional<Preset> preset_from_name(std::string_view name) {
    if (name == "simple") return Preset::Simple;
    if (name == "mrose7") return Preset::Mrose7;
    if (name == "klove7") return Preset::Klove7;
    if (name == "kohonen42") return Preset::Kohonen42;
    return std::nullopt;
}

const char* to_string(Preset p) {
    switch (p) {
    case Preset::Simple: return "simple";
    case Preset::Mrose7: return "mrose7";
    case Preset::Klove7: return "klove7";
    case Preset::Kohonen42: return "kohonen42";
    }
    throw InputError("unknown preset");
}

bool preset_has_placement(Preset p) { return p != Preset::Simple; }

const Placement& preset_placement(Preset p) {
    // Seven segments reaching m = 14 (c = 2/7), in its two classical forms.
    static const Placement mrose7{IntSet{0, 6, 10}, IntSet{0, 1, 2}, IntSet{3}};
    static const Placement klove7{IntSet{0, 3}, IntSet{0, 1, 2}, IntSet{6, 10}};
    // Forty-two segments reaching m = 510 (c = 85/294).
    static const Placement kohonen42{
        IntSet{0, 5}.unite(IntSet::ap(112, 5, 137)),
        IntSet::ap(10, 6, 106),
        IntSet::interval(0, 4).unite(IntSet::interval(224, 229)).unite(IntSet::interval(367, 372))};

    switch (p) {
    case Preset::Simple: throw InputError("preset 'simple' is not a segment placement");
    case Preset::Mrose7: return mrose7;
    case Preset::Klove7: return klove7;
    case Preset::Kohonen42: return kohonen42;
    }
    throw InputError("unknown preset");
}

IntSet preset_basis(Preset p, int t) {
    if (p == Preset::Simple) return simple_basis(t);
    return build_basis(preset_placement(p), t);
}

} // namespace addbasis
