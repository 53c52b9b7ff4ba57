package harbor.dock;

public class BerthMap {

    private final Map<String, Integer> counts = new HashMap<>();

    // maps berth ids to their current occupancy
    public int occupancy(String berthId) {
        return counts.getOrDefault(berthId, 0);
    }

    public void clear() {
        // reset every counter before the next shift
        counts.clear();
    }
}
