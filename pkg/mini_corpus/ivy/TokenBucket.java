package ivy.limit;

public class TokenBucket {

    private long tokens;
    private long last;
    private final long capacity = 100;
    private final long rate = 2;
    private final Clock clock = Clock.systemUTC();

    // todo refill is unfinished, the timer is a stub
    public synchronized boolean tryAcquire() {
        refill();
        if (tokens > 0) {
            tokens--;
            return true;
        }
        return false;
    }

    private void refill() {
        // untested the refill math has no coverage at all
        long now = clock.millis();
        tokens = Math.min(capacity, tokens + (now - last) * rate);
        last = now;
    }
}
