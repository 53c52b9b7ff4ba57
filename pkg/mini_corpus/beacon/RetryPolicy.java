package beacon.net;

public class RetryPolicy {

    private final long baseDelay = 50;
    private final long maxDelay = 30_000;

    /**
     * Computes the next backoff delay.
     * todo jitter is unfinished and the buffer growth is untested
     */
    @Override
    public long nextDelay(int attempt) {
        return Math.min(maxDelay, baseDelay << attempt);
    }
}
