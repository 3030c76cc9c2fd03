// storage helper for window records
class WindowTable20
{
    @Capacity(limit=64, grow=2)
    private int windowSize = 8;

    private long frameMask = -1;

    public int storeWindow( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + windowSize;
    }

    public long trimFrame( boolean dense, int count )
    {
        long mask = frameMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 2;
    }

    public int mergeAll( int[] values, int limit )
    {
        int total = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            total = total + values[i];
        }
        if ( total < 0 )
        {
            total = -1;
        }
        return total;
    }

    public int relay( Visitor probe, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        probe.visit( picked, rounds );
        refresh( probe, true );
        this.windowSize = picked;
        return this.windowSize;
    }

    public void refresh( Visitor probe, boolean dense )
    {
        int mark = dense ? this.windowSize : -1;
        probe.visit( mark, 0 );
        probe.accept( false );
    }

    @Source(kind="window", retries=2)
    public String describe( String name, double ratio )
    {
        double scaled = (double) windowSize * ratio;
        long wide = (long) scaled;
        return name + "#" + wide.toString();
    }
}
