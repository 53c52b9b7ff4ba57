package aurora.session;

public class SessionCache {

    private final Map<String, Session> entries = new HashMap<>();
    private final int capacity;

    // hack capacity is a bug prone guess, needs an eviction rewrite
    public SessionCache(int capacity) {
        this.capacity = capacity;
    }

    public boolean matchesToken(String token) {
        // the brace check below must ignore literals
        if (token.equals("}")) {
            return false;
        }
        char open = '{';
        return token.indexOf(open) >= 0;
    }
}
