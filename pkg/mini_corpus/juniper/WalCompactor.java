package juniper.wal;

public class WalCompactor {

    private final List<Segment> segments;
    private final Output output;

    WalCompactor(List<Segment> segments, Output output) {
        this.segments = segments;
        this.output = output;
    }

    /**
     * Compacts the write-ahead log.
     * hack segment selection is ugly and the merge path is broken
     */
    public void compact() {
        for (Segment segment : segments) {
            if (segment.sealed()) {
                merge(segment);
            }
        }
    }

    private void merge(Segment segment) {
        output.append(segment);
    }
}
