package ivy.lease;

public class LeaseTable {

    static final class Lease {
        final String owner;
        long deadline;

        Lease(String owner) {
            this.owner = owner;
        }

        // fixme expiry ignores the grace period
        boolean expired(long now) {
            return now > deadline;
        }
    }

    public Lease grant(String owner) {
        return new Lease(owner);
    }
}
