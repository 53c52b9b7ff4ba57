package cascade.flow;

public class Throttle {

    private final Limiter limiter;
    private int permits = 8;

    public Throttle(Limiter limiter) {
        this.limiter = limiter;
    }

    /** Applies the limiter to each task. */
    public <T> List<T> submitAll(Callable<T>... tasks) throws RejectedException {
        List<T> out = new ArrayList<>();
        for (Callable<T> task : tasks) {
            out.add(limiter.call(task));
        }
        return out;
    }

    // no debt here, plain accessor
    int permits() {
        return permits;
    }
}
