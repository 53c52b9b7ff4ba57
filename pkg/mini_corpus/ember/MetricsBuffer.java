package ember.metrics;

public class MetricsBuffer {

    private final Segment segment = new Segment();
    private final ByteBuffer buffer = ByteBuffer.allocate(4096);

    public static MetricsBuffer empty() {
        return new MetricsBuffer();
    }

    // flush assumes a single writer

    // xxx concurrent flush corrupts the tail segment
    public void flush() {
        segment.write(buffer);
        buffer.clear();
    }
}
