#include <borders/succinct_validator.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace borders {
namespace {

constexpr std::uint64_t kFlag = std::uint64_t{1} << 63;

std::uint64_t bits_for(std::uint64_t max_value) {
    return static_cast<std::uint64_t>(std::bit_width(max_value));
}

}  // namespace

SuccinctValidator::SuccinctValidator(SuccinctOptions options)
    : options_(options),
      lg_(static_cast<unsigned>(std::bit_width(options.n_max))),
      waiting_(64),
      ready_(64) {}

std::uint8_t SuccinctValidator::class_of(std::uint64_t v) {
    return static_cast<std::uint8_t>(std::bit_width(v - 1) - 1);
}

std::uint8_t SuccinctValidator::slot_of(std::uint64_t v, std::uint32_t depth) {
    return static_cast<std::uint8_t>(2 * (std::bit_width(v) - 1) + (depth & 1U));
}

std::uint32_t SuccinctValidator::block_of_position(std::size_t x) const {
    const Record& r = records_[x - 1];
    if (r.cls == kNoClass) return kNone;
    if (r.cls == kUnitClass) return kUnit;
    const auto it = group_index_.find(group_key(r.cls, (x - 1) >> r.cls));
    return groups_[it->second].blocks[r.slot];
}

std::uint32_t SuccinctValidator::depth_of(std::uint32_t block) const {
    if (block == kNone) return 0;
    if (block == kUnit) return 1;
    return blocks_[block].depth;
}

SuccinctValidator::Entry SuccinctValidator::read(std::uint32_t block, std::uint8_t slot,
                                                 std::uint32_t chase) {
    if (block == kNone) return {};
    if (block == kUnit) return slot == slot_of(1, 1) ? Entry{1, true} : Entry{};
    stats_.max_chase = std::max<std::uint64_t>(stats_.max_chase, chase);
    if (chase > options_.max_chase) throw std::logic_error("unfinished block chain too long");
    const Block& b = blocks_[block];
    if (slot >= b.nslots) return {};
    if (b.complete || slot < b.cursor) {
        const std::uint64_t raw = pool_[b.offset + slot];
        return Entry{static_cast<std::uint32_t>(raw & ~kFlag), (raw & kFlag) != 0};
    }
    if (slot == slot_of(b.value, b.depth)) return Entry{b.value, true};
    Entry e = read(block_of_position(b.value), slot, chase + 1);
    if (slot == records_[b.value - 1].removed) e.flag = false;
    return e;
}

std::uint32_t SuccinctValidator::find_or_create(std::uint64_t v, std::size_t x, std::uint64_t& ops) {
    if (v == 1) return kUnit;
    const std::uint8_t cls = class_of(v);
    const std::uint64_t window = (x - 1) >> cls;
    const auto [it, fresh] = group_index_.try_emplace(group_key(cls, window),
                                                      static_cast<std::uint32_t>(groups_.size()));
    if (fresh) groups_.emplace_back();
    Group& g = groups_[it->second];
    for (std::uint8_t k = 0; k < g.count; ++k) {
        ++ops;
        if (blocks_[g.blocks[k]].value == v) return g.blocks[k];
    }
    if (g.count == kGroupCapacity) {
        throw BorderError(ErrorCode::CapacityViolation, "more than 48 strict failure values in one window");
    }

    const std::uint32_t parent = block_of_position(v);
    Block b;
    b.value = static_cast<std::uint32_t>(v);
    b.depth = depth_of(parent) + 1;
    b.cls = cls;
    b.nslots = static_cast<std::uint8_t>(2 * (cls + 2));
    b.offset = static_cast<std::uint32_t>(pool_.size());
    b.deadline = (window + 2) << cls;
    const auto id = static_cast<std::uint32_t>(blocks_.size());
    blocks_.push_back(b);
    pool_.resize(pool_.size() + b.nslots, 0);
    g.blocks[g.count++] = id;
    stats_.max_group_fill = std::max<std::uint64_t>(stats_.max_group_fill, g.count);

    if (read(parent, slot_of(v, b.depth)).value != 0) {
        throw BorderError(ErrorCode::CapacityViolation, "two ancestors share a block slot");
    }
    if (!options_.lazy_copy) {
        for (std::uint8_t s = 0; s < b.nslots; ++s) {
            const Entry e = read(id, s);
            pool_[b.offset + s] = e.value | (e.flag ? kFlag : 0);
            ++ops;
        }
        blocks_[id].complete = true;
        blocks_[id].cursor = b.nslots;
    } else {
        if (merge_mask_ >> cls & 1U) {
            auto& ready = ready_[cls];
            ready.insert(ready.end(), waiting_[cls].begin(), waiting_[cls].end());
            waiting_[cls].clear();
            merge_mask_ &= ~(std::uint64_t{1} << cls);
            waiting_mask_ &= ~(std::uint64_t{1} << cls);
            if (!ready.empty()) ready_mask_ |= std::uint64_t{1} << cls;
        }
        waiting_[cls].push_back(id);
        waiting_mask_ |= std::uint64_t{1} << cls;
        ++pending_;
        stats_.max_pending_jobs = std::max(stats_.max_pending_jobs, pending_);
    }
    return id;
}

void SuccinctValidator::copy_some(std::size_t x) {
    // Windows of every class up to ctz(x) end with position x.
    const int tz = std::countr_zero(static_cast<std::uint64_t>(x));
    const std::uint64_t due = tz >= 63 ? ~std::uint64_t{0} : (std::uint64_t{2} << tz) - 1;
    merge_mask_ |= waiting_mask_ & due;

    std::uint32_t budget = options_.copy_budget;
    while (budget > 0) {
        const std::uint64_t live = ready_mask_ | merge_mask_;
        if (live == 0) break;
        const int cls = std::countr_zero(live);
        const std::uint64_t bit = std::uint64_t{1} << cls;
        auto& ready = ready_[static_cast<std::size_t>(cls)];
        if (merge_mask_ & bit) {
            auto& waiting = waiting_[static_cast<std::size_t>(cls)];
            ready.insert(ready.end(), waiting.begin(), waiting.end());
            waiting.clear();
            merge_mask_ &= ~bit;
            waiting_mask_ &= ~bit;
            ready_mask_ |= bit;
        }
        if (ready.empty()) {
            ready_mask_ &= ~bit;
            continue;
        }
        const std::uint32_t id = ready.front();
        while (budget > 0 && blocks_[id].cursor < blocks_[id].nslots) {
            const std::uint8_t s = blocks_[id].cursor;
            const Entry e = read(id, s);
            pool_[blocks_[id].offset + s] = e.value | (e.flag ? kFlag : 0);
            ++blocks_[id].cursor;
            ++stats_.copied_slots;
            --budget;
        }
        if (blocks_[id].cursor == blocks_[id].nslots) {
            blocks_[id].complete = true;
            ready.pop_front();
            --pending_;
            ++stats_.jobs_done;
            if (x > blocks_[id].deadline) {
                throw BorderError(ErrorCode::CopyDeadline, "block copy finished after its deadline");
            }
        }
        if (ready.empty()) ready_mask_ &= ~bit;
    }
}

Verdict SuccinctValidator::finish_push(Verdict v, std::uint64_t ops) {
    stats_.max_push_ops = std::max(stats_.max_push_ops, ops);
    stats_.last_push_ops = ops;
    stats_.total_ops += ops;
    if (!v.valid) failed_ = true;
    return v;
}

Verdict SuccinctValidator::push(Value a) {
    if (failed_) throw BorderError(ErrorCode::PushAfterFailure, "push after rejection");
    const std::size_t x = records_.size() + 1;
    if (x > options_.n_max) throw BorderError(ErrorCode::LengthTooLarge, "input exceeds n_max");
    std::uint64_t ops = 1;

    if (x == 1) {
        if (a != 0) return finish_push(Verdict::reject(1), ops);
        records_.push_back(Record{kNoClass, 0, kNoSlot, 1, 1});
        max_alph_ = 1;
        prev_ = 0;
        if (options_.lazy_copy) copy_some(x);
        return finish_push(Verdict::accept(1, 1, 1), ops);
    }

    const Value f = prev_ + 1;
    if (a < 0 || a > f) return finish_push(Verdict::reject(x), ops);
    const auto fi = static_cast<std::size_t>(f);

    // f'[x] follows f'[f] along an extension, and is f otherwise.
    std::uint64_t v = fi;
    std::uint8_t removed = kNoSlot;
    if (a == f) {
        const std::uint32_t fb = block_of_position(fi);
        v = fb == kNone ? 0 : fb == kUnit ? 1 : blocks_[fb].value;
        removed = records_[fi - 1].removed;
    }
    const std::uint32_t block = v == 0 ? kNone : find_or_create(v, x, ops);

    if (a != 0 && a != f) {
        const auto au = static_cast<std::uint64_t>(a);
        const auto first = static_cast<std::uint8_t>(2 * (std::bit_width(au) - 1));
        for (std::uint8_t s = first; s < first + 2 && removed == kNoSlot; ++s) {
            ++ops;
            const Entry e = read(block, s);
            if (e.value == au && e.flag) removed = s;
        }
        if (removed == kNoSlot) return finish_push(Verdict::reject(x), ops);
    }

    Record rec;
    rec.removed = removed;
    if (block == kNone) {
        rec.cls = kNoClass;
    } else if (block == kUnit) {
        rec.cls = kUnitClass;
    } else {
        rec.cls = blocks_[block].cls;
        const Group& g = groups_[group_index_.at(group_key(rec.cls, (x - 1) >> rec.cls))];
        rec.slot = static_cast<std::uint8_t>(std::find(g.blocks.begin(), g.blocks.begin() + g.count, block) -
                                             g.blocks.begin());
    }
    if (a == 0) {
        rec.alph = records_[fi - 1].alph + 1;
        rec.letter = rec.alph;
        max_alph_ = std::max<std::size_t>(max_alph_, rec.alph);
    } else {
        rec.letter = records_[static_cast<std::size_t>(a) - 1].letter;
        rec.alph = records_[fi - 1].alph;
    }
    records_.push_back(rec);
    prev_ = a;
    ops += 4;
    if (options_.lazy_copy) {
        const std::uint64_t before = stats_.copied_slots;
        copy_some(x);
        ops += stats_.copied_slots - before;
    }
    return finish_push(Verdict::accept(x, max_alph_, rec.letter), ops);
}

Word SuccinctValidator::witness() const {
    if (failed_) throw BorderError(ErrorCode::StateInvalid, "no witness for a rejected array");
    Word w;
    w.reserve(records_.size());
    for (const Record& r : records_) w.push_back(r.letter);
    return w;
}

void SuccinctValidator::finish() const {
    for (const auto* lists : {&waiting_, &ready_}) {
        for (const auto& list : *lists) {
            for (const std::uint32_t id : list) {
                if (!blocks_[id].complete && records_.size() > blocks_[id].deadline) {
                    throw BorderError(ErrorCode::CopyDeadline, "block copy still pending after its deadline");
                }
            }
        }
    }
}

SuccinctMemory SuccinctValidator::memory() const {
    SuccinctMemory m;
    const std::uint64_t small = bits_for(lg_ + 2);
    const std::uint64_t record = small /* class */ + 6 /* block in group */ + small /* letter */ +
                                 small /* alph */ + bits_for(2 * (lg_ + 2) + 1) /* removed slot */;
    m.record_bits = record * records_.size();

    auto block_cost = [&](std::uint64_t cls) {
        const std::uint64_t nslots = 2 * (cls + 2);
        return cls /* value offset */ + bits_for(3 * lg_ + 4) /* depth */ + bits_for(nslots) + 1 +
               nslots * (cls + 2) + nslots /* flags */;
    };
    for (const Block& b : blocks_) m.block_bits += block_cost(b.cls);
    m.groups = groups_.size();
    m.blocks = blocks_.size();
    m.group_bits = 6 * m.groups;
    for (const auto& [key, idx] : group_index_) {
        m.allocated_bits += 6 + kGroupCapacity * block_cost(key & 0xFF);
    }
    if (options_.lazy_copy) {
        m.scheduler_bits = 3 * 64 + pending_ * bits_for(blocks_.size() + 1);
    }
    m.logical_bits = m.record_bits + m.block_bits + m.group_bits + m.scheduler_bits;
    m.allocated_bits += m.record_bits + m.scheduler_bits;
    m.physical_bytes = records_.capacity() * sizeof(Record) + blocks_.capacity() * sizeof(Block) +
                       pool_.capacity() * sizeof(std::uint64_t) + groups_.size() * sizeof(Group) +
                       group_index_.size() * (sizeof(std::uint64_t) + sizeof(std::uint32_t) + 2 * sizeof(void*));
    return m;
}

std::size_t window_distinct_check(std::span<const Value> strict) {
    const std::size_t n = strict.size();
    std::size_t best = 0;
    for (unsigned k = 0; (std::size_t{1} << k) <= n; ++k) {
        const std::size_t width = std::size_t{1} << k;
        const auto lo = static_cast<Value>(width);
        const auto hi = static_cast<Value>(2 * width);
        std::unordered_map<Value, std::size_t> counts;
        auto in_range = [&](Value v) { return v >= lo && v < hi; };
        for (std::size_t j = 0; j < n; ++j) {
            if (in_range(strict[j])) ++counts[strict[j]];
            if (j >= width && in_range(strict[j - width])) {
                auto it = counts.find(strict[j - width]);
                if (--it->second == 0) counts.erase(it);
            }
            best = std::max(best, counts.size());
        }
    }
    return best;
}

}  // namespace borders
