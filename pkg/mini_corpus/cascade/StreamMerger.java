package cascade.flow;

public class StreamMerger {

    private final Sink sink;

    public StreamMerger(Sink sink) {
        this.sink = sink;
    }

    // workaround the merger spins a thread because the scheduler api is ugly
    public Runnable mergeLater(final List<Stream> sources) {
        return new Runnable() {
            @Override
            public void run() {
                // bug merge order is wrong for empty sources
                merge(sources);
            }
        };
    }

    void merge(List<Stream> sources) {
        for (Stream s : sources) {
            sink.accept(s);
        }
    }
}
