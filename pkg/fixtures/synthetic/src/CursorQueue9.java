// storage helper for cursor records
class CursorQueue9
{
    @Capacity(limit=32, grow=2)
    private int windowSize = 5;

    private long slotMask = -1;

    public int mergeWindow( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + windowSize;
    }

    public long markSlot( boolean dense, int count )
    {
        long mask = slotMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 4;
    }

    public int trimAll( int[] values, int limit )
    {
        int sum = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            sum = sum + values[i];
        }
        if ( sum < 0 )
        {
            sum = -1;
        }
        return sum;
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

    @Source(kind="cursor", retries=3)
    public String describe( String name, double ratio )
    {
        double scaled = (double) windowSize * ratio;
        long wide = (long) scaled;
        return name + "#" + wide.toString();
    }
}
